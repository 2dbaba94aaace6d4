#include <doctest.h>

#include "edc/cyclotomic.hpp"
#include "test_support.hpp"

using namespace edc;
using edc_test::Rng;

TEST_CASE("rationals are canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(3, 2).den() == 2);
    CHECK(Rat(-3, 2).sign() == -1);
    CHECK_THROWS_AS(Rat(1, 0), arith_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), arith_error);
    CHECK(Rat(7, 3).str() == "7/3");
}

TEST_CASE("power-coefficient reduction") {
    // sum of all n-th roots of unity vanishes for n > 1
    std::vector<Rat> raw(3, Rat(1));
    CHECK(CycNum::from_power_coeffs(3, raw).is_zero());
    // zeta_4^2 = -1
    CHECK(CycNum::zeta_pow(4, 2) == CycNum::from_rat(4, Rat(-1)));
    // zeta_7^7 = 1
    CHECK(CycNum::zeta_pow(7, 7) == CycNum::one(7));
    // n = 1 degenerates to Q
    CHECK(CycNum::zeta_pow(1, 5) == CycNum::one(1));
}

TEST_CASE("conjugation examples") {
    CHECK(CycNum::one(4).conj() == CycNum::one(4));
    CHECK(CycNum::zeta_pow(4, 1).conj() == -CycNum::zeta_pow(4, 1));
    CycNum x = CycNum::one(3) + Rat(2) * CycNum::zeta_pow(3, 1);
    CycNum expect = CycNum::from_rat(3, Rat(-1)) - Rat(2) * CycNum::zeta_pow(3, 1);
    CHECK(x.conj() == expect);
}

TEST_CASE("gauss sums square to +-p") {
    CycNum g3 = gauss_sum(3);
    CHECK(g3 == CycNum::one(3) + Rat(2) * CycNum::zeta_pow(3, 1));
    CHECK(g3 * g3 == CycNum::from_rat(3, Rat(-3)));
    CHECK(gauss_sum(7) * gauss_sum(7) == CycNum::from_rat(7, Rat(-7)));
    CHECK(gauss_sum(11) * gauss_sum(11) == CycNum::from_rat(11, Rat(-11)));
    CHECK_THROWS_AS(gauss_sum(9), arith_error);
    CHECK_THROWS_AS(gauss_sum(3, 7), conductor_error);
}

TEST_CASE("field axioms on random samples") {
    Rng rng(0x5eedULL);
    for (unsigned n : {3u, 4u, 7u, 12u}) {
        for (int trial = 0; trial < 25; ++trial) {
            CycNum a = rng.cyc(n), b = rng.cyc(n), c = rng.cyc(n);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycNum::one(n));
                CHECK(a / a == CycNum::one(n));
            }
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism") {
    Rng rng(0xc0ffeeULL);
    for (int trial = 0; trial < 25; ++trial) {
        CycNum a = rng.cyc(7), b = rng.cyc(7);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        // x * conj(x) is real under the numerical embedding
        std::complex<double> v = edc_test::embed(a * a.conj());
        CHECK(std::abs(v.imag()) < 1e-9);
        CHECK(v.real() > -1e-9);
    }
}

TEST_CASE("numerical embedding tracks exact arithmetic") {
    Rng rng(0xabcdULL);
    for (int trial = 0; trial < 10; ++trial) {
        CycNum a = rng.cyc(12), b = rng.cyc(12);
        auto lhs = edc_test::embed(a * b);
        auto rhs = edc_test::embed(a) * edc_test::embed(b);
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("conductor lift is an embedding") {
    Rng rng(0xfeedULL);
    for (int trial = 0; trial < 10; ++trial) {
        CycNum a = rng.cyc(3), b = rng.cyc(3);
        CHECK((a * b).lift(12) == a.lift(12) * b.lift(12));
        CHECK(std::abs(edc_test::embed(a.lift(12)) - edc_test::embed(a)) < 1e-9);
    }
    CHECK_THROWS_AS(CycNum::one(3).lift(7), conductor_error);
}

TEST_CASE("mixed conductors are rejected") {
    CHECK_THROWS_AS(CycNum::one(3) + CycNum::one(7), conductor_error);
    CHECK_THROWS_AS(CycNum::zeta_pow(3, 1) * CycNum::zeta_pow(4, 1), conductor_error);
}

TEST_CASE("encode/decode round trip") {
    Rng rng(0x1234ULL);
    for (unsigned n : {3u, 7u, 11u}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycNum a = rng.cyc(n);
            std::vector<std::uint8_t> buf;
            a.encode_into(buf);
            const std::uint8_t* p = buf.data();
            CycNum back = CycNum::decode_from(n, p, buf.data() + buf.size());
            CHECK(back == a);
            CHECK(p == buf.data() + buf.size());
        }
    }
}

TEST_CASE("canonical text rendering") {
    CycNum x = CycNum::from_rat(7, Rat(1, 2)) - Rat(3) * CycNum::zeta_pow(7, 2);
    CHECK(x.str() == "1/2 - 3*z^2 (z = zeta_7)");
    CHECK(CycNum::zero(7).str() == "0");
    CHECK(CycNum::from_rat(7, Rat(-5, 3)).str() == "-5/3");
}
