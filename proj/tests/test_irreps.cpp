#include "vistab/irreps.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vistab;

static const CuspidalSymbol io = CuspidalSymbol::iota();

static IrrepLabel L(std::initializer_list<std::pair<CuspidalSymbol, std::vector<int>>> entries) {
    IrrepLabel::Support s;
    for (const auto& [sym, parts] : entries)
        s.emplace(sym, Partition(parts));
    return IrrepLabel(s);
}

TEST_CASE("cuspidal symbols") {
    CHECK(io.is_iota());
    CHECK(io.to_string() == "iota");
    CHECK(CuspidalSymbol(2, 0).to_string() == "c(2,0)");
    CHECK(CuspidalSymbol::parse("iota") == io);
    CHECK(CuspidalSymbol::parse("c(2,0)") == CuspidalSymbol(2, 0));
    CHECK(CuspidalSymbol::parse("c(12,34)") == CuspidalSymbol(12, 34));
    CHECK_THROWS_AS(CuspidalSymbol::parse("c(2;0)"), std::invalid_argument);
    CHECK_THROWS_AS(CuspidalSymbol::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(CuspidalSymbol(0, 0), std::invalid_argument);
    CHECK(CuspidalSymbol(1, 1) < CuspidalSymbol(2, 0));
    CHECK(CuspidalSymbol(2, 0) < CuspidalSymbol(2, 1));
}

TEST_CASE("cuspidal counts") {
    CHECK(cuspidal_count(1, 2) == 1);
    CHECK(cuspidal_count(1, 5) == 4);
    CHECK(cuspidal_count(2, 2) == 1);
    CHECK(cuspidal_count(2, 3) == 3);
    CHECK(cuspidal_count(3, 2) == 2);
    CHECK(cuspidal_count(4, 2) == 3);
    CHECK(cuspidal_count(6, 2) == 9);
    CHECK(cuspidal_count(2, 5) == 10);
}

TEST_CASE("irrep labels") {
    IrrepLabel mu = L({{io, {2, 1}}, {CuspidalSymbol(2, 0), {1}}});
    CHECK(mu.norm() == 5);
    CHECK(mu.to_string() == "{iota:[2,1], c(2,0):[1]}");
    CHECK(L({{io, {2, 1}}}).norm() == 3);
    CHECK(L({{CuspidalSymbol(2, 0), {1}}}).norm() == 2);
    CHECK(IrrepLabel().norm() == 0);
    CHECK(IrrepLabel().to_string() == "{}");
    // Empty partitions vanish from the support.
    CHECK(L({{io, {}}}) == IrrepLabel());
    CHECK(mu.with_component(io, Partition()) == L({{CuspidalSymbol(2, 0), {1}}}));
    CHECK(mu.component(CuspidalSymbol(3, 0)).empty());
}

TEST_CASE("pad and unpad") {
    CHECK(pad(L({{io, {1}}}), 3) == L({{io, {2, 1}}}));
    CHECK(pad(IrrepLabel(), 4) == L({{io, {4}}}));
    CHECK_THROWS_AS(pad(L({{io, {2}}}), 3), std::invalid_argument);

    CHECK(unpad(L({{io, {2, 1}}})) == std::pair{L({{io, {1}}}), 3});
    CHECK(unpad(L({{io, {4}}})) == std::pair{IrrepLabel(), 4});
    CHECK(unpad(L({{CuspidalSymbol(2, 0), {1}}, {io, {3}}})) ==
          std::pair{L({{CuspidalSymbol(2, 0), {1}}}), 5});

    // pad and unpad are mutually inverse wherever pad is defined.
    for (Int q : {2, 3}) {
        for (int k = 0; k <= 5; ++k) {
            for (const auto& lam : enumerate_irreps(k, q)) {
                int lo = lam.norm() + lam.component(io).first();
                for (int n = lo; n <= 12; ++n) {
                    auto [back, level] = unpad(pad(lam, n));
                    CHECK(back == lam);
                    CHECK(level == n);
                }
            }
        }
    }
}

TEST_CASE("dimensions") {
    CHECK(dim_symbolic(L({{io, {3}}})) == QPoly::constant(1));
    CHECK(dim_symbolic(L({{io, {1, 1}}})) == QPoly::var());
    CHECK(dim_symbolic(L({{CuspidalSymbol(2, 0), {1}}})) == QPoly::var() - QPoly::constant(1));
    CHECK(dim_symbolic(L({{io, {2, 1}}})) == QPoly::monomial(2) + QPoly::var());
    CHECK(dim_at(L({{io, {2, 1}}}), 2) == 6);
    CHECK(dim_at(L({{io, {2, 1}}}), 3) == 12);

    // Steinberg: iota with a length-n column has dimension q^{n(n-1)/2}.
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> col(n, 1);
        CHECK(dim_symbolic(L({{io, col}})) == QPoly::monomial(n * (n - 1) / 2));
    }
}

TEST_CASE("enumerate irreps") {
    Int two = 2;
    CHECK(enumerate_irreps(0, two) == std::vector<IrrepLabel>{IrrepLabel()});
    CHECK(enumerate_irreps(1, two) == std::vector<IrrepLabel>{L({{io, {1}}})});
    auto at2 = enumerate_irreps(2, two);
    CHECK(at2 == std::vector<IrrepLabel>{L({{io, {2}}}), L({{io, {1, 1}}}),
                                         L({{CuspidalSymbol(2, 0), {1}}})});
    // Level-2 dimensions at q=2: 1, 2, 1; squares sum to |GL_2(F_2)| = 6.
    CHECK(dim_at(at2[0], 2) == 1);
    CHECK(dim_at(at2[1], 2) == 2);
    CHECK(dim_at(at2[2], 2) == 1);
}

TEST_CASE("group order") {
    CHECK(group_order(0, 2) == 1);
    CHECK(group_order(2, 2) == 6);
    CHECK(group_order(3, 2) == 168);
    CHECK(group_order(2, 3) == 48);
}

TEST_CASE("sum of squares of dimensions is the group order") {
    for (Int q : {2, 3, 4, 5}) {
        for (int n = 1; n <= 4; ++n) {
            Int sum = 0;
            for (const auto& mu : enumerate_irreps(n, q)) {
                CHECK(mu.norm() == n);
                Int d = dim_at(mu, q);
                CHECK(d > 0);
                // Symbolic and numeric dimension agree.
                CHECK(dim_symbolic(mu).eval(Rat(q)) == Rat(d));
                sum += d * d;
            }
            CHECK(sum == group_order(n, q));
        }
    }
}
