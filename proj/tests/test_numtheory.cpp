#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rnskit/numtheory.hpp"

using rnskit::BigInt;

namespace {

// Independent oracle: scan every candidate divisor.
BigInt brute_force_gcd(const BigInt& a, const BigInt& b) {
    BigInt best = 0;
    for (BigInt d = 1; d <= a && d <= b; ++d)
        if (a % d == 0 && b % d == 0) best = d;
    return best == 0 ? (a == 0 ? b : a) : best;
}

// Independent oracle: scan every candidate inverse.
BigInt brute_force_inverse(const BigInt& a, const BigInt& m) {
    for (BigInt w = 0; w < m; ++w)
        if (rnskit::canonical_mod(a * w, m) == 1) return w;
    return -1;
}

} // namespace

TEST_CASE("ext_gcd satisfies the Bezout identity") {
    auto r = rnskit::ext_gcd(221, 11);
    CHECK(r.g == 1);
    CHECK(BigInt(221) * r.u + BigInt(11) * r.v == r.g);

    r = rnskit::ext_gcd(1, 7);
    CHECK(r.g == 1);
    CHECK(r.u == 1);
    CHECK(r.v == 0);

    r = rnskit::ext_gcd(12, 18);
    CHECK(r.g == brute_force_gcd(12, 18));
    CHECK(r.g == 6);
    CHECK(BigInt(12) * r.u + BigInt(18) * r.v == 6);
}

TEST_CASE("ext_gcd Bezout equality holds on random pairs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        BigInt a = rng() % 1000000;
        BigInt b = rng() % 1000000;
        if (a == 0 && b == 0) a = 1;
        auto r = rnskit::ext_gcd(a, b);
        CHECK(a * r.u + b * r.v == r.g);
        CHECK(r.g > 0);
        CHECK(a % r.g == 0);
        CHECK(b % r.g == 0);
    }
}

TEST_CASE("ext_gcd rejects the all-zero input") {
    CHECK_THROWS_AS(rnskit::ext_gcd(0, 0), rnskit::DegenerateInputError);
    CHECK_THROWS_AS(rnskit::ext_gcd(-1, 3), rnskit::PreconditionError);
}

TEST_CASE("mod_inverse returns the canonical inverse") {
    CHECK(rnskit::mod_inverse(143, 17) == 5); // 143 * 5 = 715 = s_3 * |1/s_3|
    CHECK(rnskit::mod_inverse(1, 13) == 1);
    CHECK(rnskit::mod_inverse(11, 221) == 201);

    CHECK(rnskit::mod_inverse(143, 17) == brute_force_inverse(143, 17));
    CHECK(rnskit::mod_inverse(11, 221) == brute_force_inverse(11, 221));
}

TEST_CASE("mod_inverse inverse property on random coprime pairs") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 500) {
        BigInt a = rng() % 1000000;
        BigInt m = 2 + rng() % 1000000;
        if (rnskit::gcd_of(a, m) != 1) continue;
        BigInt w = rnskit::mod_inverse(a, m);
        CHECK(w >= 0);
        CHECK(w < m);
        CHECK(rnskit::canonical_mod(a * w, m) == 1);
        ++done;
    }
}

TEST_CASE("mod_inverse error paths") {
    CHECK_THROWS_AS(rnskit::mod_inverse(6, 9), rnskit::NotInvertibleError);
    CHECK_THROWS_AS(rnskit::mod_inverse(3, 1), rnskit::PreconditionError);
    CHECK_THROWS_AS(rnskit::mod_inverse(0, 8), rnskit::NotInvertibleError);
}

TEST_CASE("inverse-splitting identity on the paper operands") {
    // a = P_2*P_3, b = P_1, c = 1 for the {11, 13, 17} set.
    CHECK(rnskit::check_inverse_identity(221, 11, 1));
    CHECK(rnskit::check_inverse_identity(3, 4, 5));
}

TEST_CASE("inverse-splitting identity rejects non-coprime input") {
    CHECK_THROWS_AS(rnskit::check_inverse_identity(4, 6, 1), rnskit::PreconditionError);
    CHECK_THROWS_AS(rnskit::check_inverse_identity(1, 6, 1), rnskit::PreconditionError);
}

TEST_CASE("inverse-splitting identity holds on random coprime triples") {
    std::mt19937_64 rng(2026);
    int done = 0;
    while (done < 300) {
        BigInt a = 2 + rng() % 1000000;
        BigInt b = 2 + rng() % 1000000;
        BigInt c = 1 + rng() % 1000000;
        if (rnskit::gcd_of(a, b) != 1 || rnskit::gcd_of(a, c) != 1 || rnskit::gcd_of(b, c) != 1)
            continue;
        CHECK(rnskit::check_inverse_identity(a, b, c));
        ++done;
    }
}

TEST_CASE("canonical_mod maps negatives into range") {
    CHECK(rnskit::canonical_mod(-4348, 2431) == 514);
    CHECK(rnskit::canonical_mod(-1, 7) == 6);
    CHECK(rnskit::canonical_mod(0, 7) == 0);
    CHECK(rnskit::canonical_mod(15, 7) == 1);
}
