#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "sla/extension.hpp"

using namespace sla;

namespace {

bool same_presentation(const SuperAlgebra& a, const SuperAlgebra& b) {
    return a.n == b.n && a.m == b.m && a.labels == b.labels && a.table == b.table;
}

Subspace diag_action_span(const SolvableModel& model) {
    const SuperAlgebra& r = model.algebra;
    Mat rows;
    for (auto z : model.z_indices) {
        Vec diag;
        for (auto i : model.nilp_indices)
            diag.push_back(r.table[i][z][i]);
        rows.push_back(std::move(diag));
    }
    return subspace_from_rows(rows, model.nilp_indices.size());
}

const CheckResult& check_by_id(const VerificationReport& rep, int id) {
    for (const auto& c : rep.checks)
        if (c.id == id)
            return c;
    throw std::runtime_error("missing check id");
}

} // namespace

TEST_CASE("attach_torus reproduces the stored extension of n1") {
    SuperAlgebra n1 = test_helpers::corpus("n1");
    Mat diags = {{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)}};
    SolvableModel model = attach_torus(n1, diags);
    REQUIRE(same_presentation(model.algebra, test_helpers::corpus("ext_n1")));
    REQUIRE(model.nilp_indices == std::vector<std::size_t>{0, 3, 4});
    REQUIRE(model.z_indices == std::vector<std::size_t>{1, 2});
    REQUIRE(model.nilradical_dims == std::pair<std::size_t, std::size_t>{1, 2});
    REQUIRE(validate(model.algebra).ok());
}

TEST_CASE("attach_torus reproduces the stored extension of n2") {
    SuperAlgebra n2 = test_helpers::corpus("n2");
    Mat diags = {{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)},
                 {Rat(0), Rat(2), Rat(1), Rat(1), Rat(1)}};
    SolvableModel model = attach_torus(n2, diags);
    REQUIRE(same_presentation(model.algebra, test_helpers::corpus("ext_n2")));
    REQUIRE(validate(model.algebra).ok());
}

TEST_CASE("maximal solvable extension of n1 matches the stored file exactly") {
    SolvableModel model = maximal_solvable_extension(test_helpers::corpus("n1"));
    REQUIRE(same_presentation(model.algebra, test_helpers::corpus("ext_n1")));
    REQUIRE(model.q == 2);
    REQUIRE(model.q_split == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("maximal solvable extension of n2 matches up to torus basis") {
    SolvableModel model = maximal_solvable_extension(test_helpers::corpus("n2"));
    REQUIRE(model.q == 2);
    REQUIRE(model.q_split == std::pair<std::size_t, std::size_t>{1, 1});

    SuperAlgebra stored = test_helpers::corpus("ext_n2");
    SolvableModel stored_model = model_from_solvable(stored);
    REQUIRE(model.nilp_indices == stored_model.nilp_indices);
    REQUIRE(diag_action_span(model) == diag_action_span(stored_model));
}

TEST_CASE("extension is refused off maximal rank") {
    REQUIRE_THROWS_AS(maximal_solvable_extension(test_helpers::corpus("n4")),
                      NotMaximalRank);
    REQUIRE_THROWS_AS(maximal_solvable_extension(test_helpers::corpus("cn8")),
                      NotMaximalRank);
}

TEST_CASE("constructed extensions pass all nine checks") {
    for (const char* stem : {"n1", "n2", "n3_m3", "n3_m5", "osq4"}) {
        INFO(stem);
        SolvableModel model = maximal_solvable_extension(test_helpers::corpus(stem));
        REQUIRE(validate(model.algebra).ok());
        VerificationReport rep = verify_model(model);
        for (const auto& c : rep.checks) {
            INFO("check " << c.id << " " << c.name << ": " << c.detail);
            REQUIRE(c.pass);
        }
        REQUIRE(rep.checks.size() == 9);
        REQUIRE(rep.q_matches_max_torus);
        REQUIRE(rep.der0_dim == rep.inner_dim);
    }
}

TEST_CASE("torus split bounds are met with equality for n2") {
    SolvableModel model = maximal_solvable_extension(test_helpers::corpus("n2"));
    VerificationReport rep = verify_model(model);
    REQUIRE(rep.q_split == std::pair<std::size_t, std::size_t>{1, 1});
    REQUIRE(rep.q_bounds == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("expected q splits of the corpus extensions") {
    REQUIRE(maximal_solvable_extension(test_helpers::corpus("osq4")).q_split ==
            std::pair<std::size_t, std::size_t>{0, 2});
    REQUIRE(maximal_solvable_extension(test_helpers::corpus("n1")).q_split ==
            std::pair<std::size_t, std::size_t>{0, 2});
    REQUIRE(maximal_solvable_extension(test_helpers::corpus("n3_m5")).q_split ==
            std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("solvable corpus algebras viewed as models") {
    SolvableModel r4 = model_from_solvable(test_helpers::corpus("r4"));
    REQUIRE(r4.z_indices == std::vector<std::size_t>{0});
    REQUIRE(r4.nilp_indices == std::vector<std::size_t>{1, 3});
    VerificationReport rep4 = verify_model(r4);
    std::vector<int> failed4;
    for (const auto& c : rep4.checks)
        if (!c.pass)
            failed4.push_back(c.id);
    REQUIRE(failed4 == std::vector<int>{2, 3});

    SolvableModel r6 = model_from_solvable(test_helpers::corpus("r6"));
    REQUIRE(r6.z_indices == std::vector<std::size_t>{0, 1});
    VerificationReport rep6 = verify_model(r6);
    std::vector<int> failed6;
    for (const auto& c : rep6.checks)
        if (!c.pass)
            failed6.push_back(c.id);
    REQUIRE(failed6 == std::vector<int>{2, 3, 5});
    REQUIRE(check_by_id(rep6, 5).detail == "dim(R/N) = 4, dim(N/N^2) = 2");
}

TEST_CASE("stored extensions verify as models") {
    for (const char* stem : {"ext_n1", "ext_n2"}) {
        INFO(stem);
        SolvableModel model = model_from_solvable(test_helpers::corpus(stem));
        VerificationReport rep = verify_model(model);
        for (const auto& c : rep.checks) {
            INFO("check " << c.id << " " << c.name << ": " << c.detail);
            REQUIRE(c.pass);
        }
        REQUIRE(rep.q_matches_max_torus);
    }
}

TEST_CASE("odd roots distinctness probe") {
    SuperAlgebra n1 = test_helpers::corpus("n1");
    Mat good = {{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(1)}};
    REQUIRE(check_odd_roots_distinct(n1, good));
    Mat degenerate = {{Rat(2), Rat(1), Rat(1)}};
    REQUIRE_FALSE(check_odd_roots_distinct(n1, degenerate));
}

TEST_CASE("split_q rejects dependent odd torus actions") {
    SuperAlgebra ab = make_superalgebra(0, 2, {});
    Mat diags = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    SolvableModel model = attach_torus(ab, diags);
    REQUIRE_THROWS_AS(split_q(model), SlaError);
}

TEST_CASE("odd square collapse holds or reports unmet preconditions") {
    // Consistent instance: the abelian (1|1) algebra is nilpotent, of
    // maximal rank, with [N1,N1] = 0 inside C^2(N0) = 0.
    SuperAlgebra ab = make_superalgebra(1, 1, {});
    REQUIRE(check_odd_square_collapse(ab));

    for (const char* stem : {"r4", "r6", "ext_n1", "ext_n2",   // not nilpotent
                             "n4", "cn8", "cn9",               // not maximal rank
                             "n1", "n2", "n3_m3", "n3_m5", "osq4"}) { // containment
        INFO(stem);
        REQUIRE_THROWS_AS(check_odd_square_collapse(test_helpers::corpus(stem)),
                          PreconditionNotMet);
    }
}
