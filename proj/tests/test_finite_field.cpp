#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "finite_field.hpp"
#include "oracles.hpp"

using namespace x3p;

TEST_CASE("prime fields use the trivial modulus") {
    Field f(5, 1);
    CHECK(f.order() == 5);
    CHECK(f.degree() == 1);
    CHECK(f.modulus() == std::vector<uint64_t>{0, 1});
    CHECK(f.element(3).index() == 3);
    CHECK((f.element(3) + f.element(4)).index() == 2);
    CHECK((f.element(3) * f.element(4)).index() == 2);
    CHECK((f.element(1) - f.element(4)).index() == 2);
}

TEST_CASE("modulus selection is the smallest irreducible encoding") {
    CHECK(Field(2, 2).modulus() == std::vector<uint64_t>{1, 1, 1});     // x^2+x+1
    CHECK(Field(3, 2).modulus() == std::vector<uint64_t>{1, 0, 1});     // x^2+1
    CHECK(Field(2, 3).modulus() == std::vector<uint64_t>{1, 1, 0, 1});  // x^3+x+1
    CHECK(Field(2, 4).modulus() == std::vector<uint64_t>{1, 1, 0, 0, 1});
    CHECK(Field(5, 2).modulus() == std::vector<uint64_t>{2, 0, 1});     // x^2+2
    CHECK(Field(3, 3).modulus() == std::vector<uint64_t>{1, 2, 0, 1});  // x^3+2x+1
}

TEST_CASE("constructor rejections") {
    CHECK_THROWS_AS(Field(1, 1), Error);
    CHECK_THROWS_AS(Field(6, 1), Error);
    CHECK_THROWS_AS(Field(4, 2), Error);
    CHECK_THROWS_AS(Field(2, 0), Error);
    CHECK_THROWS_AS(Field(2, 40), Error);
    try {
        Field(6, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime);
    }
    try {
        Field(2, 40);
    } catch (const Error& e) {
        CHECK(e.code() == errc::order_too_large);
    }
}

TEST_CASE("field axioms hold on every element of small fields") {
    for (auto [p, e] : {std::pair<uint64_t, uint64_t>{2, 2}, {3, 2}, {2, 3}, {7, 1}, {3, 3}}) {
        Field f(p, e);
        const uint64_t q = f.order();
        for (uint64_t i = 0; i < q; ++i) {
            FieldElement a = f.element(i);
            CHECK((a + f.zero()) == a);
            CHECK((a * f.one()) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a.pow(q - 1) == f.one());   // Fermat
                CHECK((a * a.pow(q - 2)) == f.one());
            }
        }
        // spot-check associativity and distributivity on a few triples
        for (uint64_t i = 0; i < q; i += 2)
            for (uint64_t j = 1; j < q; j += 3) {
                FieldElement a = f.element(i), b = f.element(j), c = f.element((i + j) % q);
                CHECK(((a + b) + c) == (a + (b + c)));
                CHECK(((a * b) * c) == (a * (b * c)));
                CHECK((a * (b + c)) == (a * b + a * c));
            }
    }
}

TEST_CASE("multiplication matches the schoolbook oracle") {
    std::mt19937_64 rng(7);
    for (auto [p, e] : {std::pair<uint64_t, uint64_t>{2, 4}, {3, 3}, {7, 2}, {5, 3}}) {
        Field f(p, e);
        std::uniform_int_distribution<uint64_t> pick(0, f.order() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement a = f.element(pick(rng));
            FieldElement b = f.element(pick(rng));
            CHECK((a * b).coeffs() == oracle::field_mul(p, f.modulus(), a.coeffs(), b.coeffs()));
        }
    }
}

TEST_CASE("primitive element is the first generator in encoding order") {
    CHECK(Field(5, 1).primitive_element().index() == 2);
    CHECK(Field(7, 1).primitive_element().index() == 3);
    CHECK(Field(2, 2).primitive_element().index() == 2);  // x
    CHECK(Field(3, 2).primitive_element().index() == 4);  // x+1

    for (auto [p, e] : {std::pair<uint64_t, uint64_t>{2, 4}, {5, 2}, {3, 3}, {11, 1}}) {
        Field f(p, e);
        FieldElement g = f.primitive_element();
        const uint64_t n = f.order() - 1;
        // g has full order: no earlier power returns to one
        FieldElement x = g;
        for (uint64_t k = 1; k < n; ++k) {
            CHECK_FALSE(x == f.one());
            x = x * g;
        }
        CHECK(x == f.one());
        // nothing smaller generates
        for (uint64_t k = 1; k < g.index(); ++k) {
            FieldElement h = f.element(k);
            bool full = true;
            FieldElement y = h;
            for (uint64_t j = 1; j < n && full; ++j) {
                if (y == f.one()) full = false;
                y = y * h;
            }
            CHECK_FALSE(full);
        }
    }
}

TEST_CASE("subfield membership via Frobenius") {
    Field f(5, 2);
    uint64_t members = 0;
    for (uint64_t i = 0; i < f.order(); ++i)
        if (in_subfield(f.element(i), 5)) ++members;
    CHECK(members == 5);
    // constants are exactly the subfield
    for (uint64_t i = 0; i < 5; ++i) CHECK(in_subfield(f.element(i), 5));

    Field g(2, 4);
    members = 0;
    for (uint64_t i = 0; i < g.order(); ++i)
        if (in_subfield(g.element(i), 4)) ++members;
    CHECK(members == 4);

    CHECK_THROWS_AS(in_subfield(f.element(1), 3), Error);
    try {
        in_subfield(f.element(1), 3);
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_subfield_order);
    }
}

TEST_CASE("operations across distinct fields are rejected") {
    Field f(2, 2), g(3, 2);
    CHECK_THROWS_AS(f.element(1) + g.element(1), Error);
    try {
        auto bad = f.element(1) * g.element(2);
        (void)bad;
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::mixed_fields);
    }
    CHECK_THROWS_AS(f.element(4), Error);
}
