#include <doctest.h>

#include <random>

#include "higgs/expr.hpp"
#include "higgs/zoo.hpp"
#include "random_polys.hpp"

using namespace higgs;
using higgs::testing::random_polynomial;

namespace {
const DeformationParams kRef = DeformationParams::make(0.6, 3.0);
}

TEST_CASE("parser: products, powers, scalars, parameters") {
    const auto ast = parse("ad(1)*a(2)");
    CHECK(ast->kind == ExprNode::Kind::product);
    CHECK(ast->children[0]->kind == ExprNode::Kind::atom);
    CHECK(ast->children[0]->creation);
    CHECK(ast->children[1]->mode == 2);

    const auto p = parse_polynomial("i*gamma*ad(3)^2*a(3)^2", kRef);
    CHECK(p.term_count() == 1);
    CHECK(std::abs(p.coefficient(TermKey{{0, 0, 2}, {0, 0, 2}}) -
                   Complex{0.0, 0.6}) < 1e-15);

    // distribution happens at lowering
    const auto q = parse_polynomial("ad(1)*(a(2)+a(3))", kRef);
    CHECK(q.term_count() == 2);
}

TEST_CASE("lowering reorders and substitutes parameters") {
    const auto p = parse_polynomial("a(1)*ad(1)", kRef);
    CHECK(p == BosonPolynomial::number(3, 1) +
                   BosonPolynomial::constant(3, {1.0, 0.0}));

    // omega0 (c - ad(3) a(3)) is the deformed diagonal generator
    const auto m0 = parse_polynomial("omega0*(c - ad(3)*a(3))", kRef);
    const auto family = make_dyson_maleev(kRef);
    CHECK(max_coefficient_diff(m0, family.gen("M0")) < 1e-15);
}

TEST_CASE("unicode dagger alias is accepted") {
    const auto p = parse_polynomial("a\xE2\x80\xA0(2)*a(1)", kRef);
    const auto q = parse_polynomial("ad(2)*a(1)", kRef);
    CHECK(p == q);
}

TEST_CASE("complex literal forms") {
    const auto p = parse_polynomial("2+3i", kRef);
    CHECK(std::abs(p.constant_term() - Complex{2.0, 3.0}) < 1e-15);
    const auto q = parse_polynomial("(2-3i)*ad(1)*a(1)", kRef);
    CHECK(std::abs(q.coefficient(TermKey{{1, 0, 0}, {1, 0, 0}}) -
                   Complex{2.0, -3.0}) < 1e-15);
}

TEST_CASE("print -> parse round trip on random polynomials") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_polynomial(rng, 3);
        const auto back = parse_polynomial(to_string(p), kRef);
        CHECK(max_coefficient_diff(p, back) <
              1e-15 * std::max(1.0, p.max_abs_coefficient()));
    }
    CHECK(parse_polynomial("0", kRef).is_zero());
}

TEST_CASE("canonical text of the deformed generators round-trips") {
    const auto family = make_js_family(kRef);
    for (const auto& name : {"J0", "J+", "J-"}) {
        const auto& gen = family.gen(name);
        CHECK(max_coefficient_diff(gen, parse_polynomial(to_string(gen), kRef)) <
              1e-15);
    }
}

TEST_CASE("malformed inputs produce diagnostics, never crashes") {
    const char* corpus[] = {
        "",        "()",        "ad(",      "ad(0)",   "a(4)",
        "2**3",    "1.2.3",     "gamma(",   "delta",   "ad(1)^-2",
        "i*",      "(2+3i",     ")",        "2^1.5",   "ad(1)^(2)",
        "a()",     "ad(1)a(2)", "1e",       "+",       "a(1.5)",
    };
    for (const char* text : corpus) {
        CHECK_THROWS_AS(parse_polynomial(text, kRef), ParseError);
    }
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_polynomial("ad(1) *\n delta", kRef);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}
