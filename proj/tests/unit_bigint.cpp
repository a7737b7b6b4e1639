#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "specht/bigint.hpp"

#include <cstdlib>
#include <numeric>

using specht::BigInt;
using specht::Rational;

TEST_CASE("small arithmetic agrees with long long") {
    srand(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = (rand() % 200001) - 100000;
        long long b = (rand() % 200001) - 100000;
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        CHECK(BigInt::cmp(BigInt(a), BigInt(b)) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("exact division and gcd") {
    srand(999);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = (rand() % 20001) - 10000;
        long long b = (rand() % 9999) + 1;
        if (rand() % 2) b = -b;
        BigInt prod = BigInt(a) * BigInt(b);
        if (b != 0) CHECK(prod.div_exact(BigInt(b)).to_ll() == a);
        long long g = std::abs(std::gcd(a, b));
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_ll() == g);
    }
}

TEST_CASE("multi-limb values") {
    BigInt x(1);
    for (int i = 0; i < 30; ++i) x *= BigInt(1000003);
    BigInt y = x * x;
    CHECK(y.div_exact(x) == x);
    CHECK(BigInt::gcd(y, x) == x.abs());
    BigInt fact(1);
    for (int i = 2; i <= 40; ++i) fact *= BigInt(i);
    CHECK(fact.str() == "815915283247897734345611269596115894272000000000");
    CHECK((fact - fact).is_zero());
    CHECK((-fact).sign() == -1);
}

TEST_CASE("rationals reduce and compute") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((Rational(BigInt(-4), BigInt(-8))).str() == "1/2");
    CHECK((Rational(BigInt(4), BigInt(-8))).str() == "-1/2");
    CHECK((half / third).str() == "3/2");
}
