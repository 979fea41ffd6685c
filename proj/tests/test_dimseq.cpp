#include <doctest.h>

#include <random>

#include "wallkit/dimseq.hpp"
#include "wallkit/errors.hpp"
#include "wallkit/verify.hpp"

using namespace wallkit;

namespace {

// Partition-sum oracle for the free commutative monoid transform,
// independent of the recurrence used by s_dims.
long long s_oracle(const DimSeq& p, int n) {
    long long acc = 0;
    for (const auto& part : enumerate_partitions(n)) {
        long long term = 1;
        for (auto b : part.blocks) term *= p.at(mask_size(b));
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("dimension sequence parsing and formatting") {
    DimSeq d = parse_dimseq("0,1,0");
    CHECK(d.at(1) == 0);
    CHECK(d.at(2) == 1);
    CHECK(d.at(3) == 0);
    CHECK(d.at(9) == 0); // beyond the stored support
    CHECK(format_dimseq(d) == "0,1,0");
    CHECK_THROWS_AS(parse_dimseq("1,x"), Error);
    CHECK_THROWS_AS(parse_dimseq("-1"), Error);
}

TEST_CASE("hadamard is pointwise") {
    DimSeq ones = DimSeq::ones(5);
    CHECK(hadamard_dims(ones, ones, 5) == ones);
    DimSeq p = parse_dimseq("0,1"), q = parse_dimseq("0,3");
    DimSeq d = hadamard_dims(p, q, 4);
    CHECK(d.at(2) == 3);
    CHECK(d.at(1) == 0);
    CHECK(d.at(3) == 0);
}

TEST_CASE("concatenation of two unit generators") {
    DimSeq d1 = DimSeq::delta(1, 4);
    DimSeq c = conc_dims(d1, d1, 4);
    CHECK(c.at(1) == 0); // both parts nonempty
    CHECK(c.at(2) == 2);
}

TEST_CASE("concatenation is symmetric on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(0, 4);
    for (int t = 0; t < 20; ++t) {
        std::vector<long long> a, b;
        for (int i = 0; i < 6; ++i) {
            a.push_back(dist(rng));
            b.push_back(dist(rng));
        }
        DimSeq p{a}, q{b};
        CHECK(conc_dims(p, q, 6) == conc_dims(q, p, 6));
    }
}

TEST_CASE("s of the unit generator is all ones") {
    DimSeq s = s_dims(DimSeq::delta(1, 6), 6);
    CHECK(s == DimSeq::ones(6));
    for (int n = 1; n <= 6; ++n) CHECK(s.at(n) == s_oracle(DimSeq::delta(1, 6), n));
}

TEST_CASE("s counts partitions weighted by block dims") {
    DimSeq p = parse_dimseq("1,1");
    DimSeq s = s_dims(p, 4);
    CHECK(s.at(2) == 2); // singletons or the one block
    for (int n = 1; n <= 4; ++n) CHECK(s.at(n) == s_oracle(p, n));
}

TEST_CASE("s_log inverts s_dims on random sequences") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> dist(0, 3);
    for (int t = 0; t < 30; ++t) {
        std::vector<long long> a;
        for (int i = 0; i < 8; ++i) a.push_back(dist(rng));
        DimSeq p{a};
        CHECK(s_log(s_dims(p, 8), 8) == p);
    }
}

TEST_CASE("s_log rejects sequences with no nonnegative preimage") {
    // s(1)=1 forces g(1)=1, then s(2)=0 needs g(2) = -1.
    CHECK_THROWS_AS(s_log(parse_dimseq("1,0"), 2), Error);
}

TEST_CASE("the unit of the connected product") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dist(0, 3);
    for (int t = 0; t < 10; ++t) {
        std::vector<long long> a;
        for (int i = 0; i < 6; ++i) a.push_back(dist(rng));
        DimSeq p{a};
        CHECK(boxtimes_dims(p, DimSeq::delta(1, 6), 6) == p);
        CHECK(boxtimes_dims(DimSeq::delta(1, 6), p, 6) == p);
    }
}

TEST_CASE("connected product of two binary generators") {
    DimSeq d2 = DimSeq::delta(2, 4);
    DimSeq b = boxtimes_dims(d2, d2, 4);
    CHECK(b.at(2) == 1);
    CHECK(b.at(3) == 0); // no partition of three elements into 2-blocks
    CHECK(b.at(4) == 6); // ordered pairs of distinct perfect matchings
    for (int n = 1; n <= 4; ++n) CHECK(b.at(n) == boxtimes_dims_xconn_oracle(d2, d2, n));
}

TEST_CASE("connected product laws via the verification checks") {
    CHECK_FALSE(checks::boxtimes_laws(5).has_value());
    CHECK_FALSE(checks::s_permute_boxtimes(6).has_value());
    CHECK_FALSE(checks::exponential_property(6).has_value());
}

TEST_CASE("weight-one free dims reproduce the generators") {
    DimSeq gen = parse_dimseq("1,2,1");
    for (int n = 1; n <= 3; ++n) CHECK(free_proto_dims(gen, 1, n) == gen.at(n));
}

TEST_CASE("weight-two free dims of the binary generator") {
    DimSeq d2 = DimSeq::delta(2, 4);
    CHECK(free_proto_dims(d2, 2, 2) == 1);
    CHECK(free_proto_dims(d2, 2, 3) == 6);
    CHECK(free_proto_dims(d2, 2, 4) == 0);
    CHECK(free_weight2_closed(d2, 2) == 1);
    CHECK(free_weight2_closed(d2, 3) == 6);
    CHECK(free_weight2_closed(d2, 4) == 0);
}

TEST_CASE("the unary tower contributes at weight two") {
    DimSeq d1 = DimSeq::delta(1, 2);
    CHECK(free_proto_dims(d1, 2, 1) == 1);
    CHECK(free_weight2_closed(d1, 1) == 1);
}

TEST_CASE("weight-two closed form matches wall enumeration for a mixed generator") {
    DimSeq gen = parse_dimseq("1,1");
    for (int n = 1; n <= 4; ++n)
        CHECK(free_weight2_closed(gen, n) == free_proto_dims(gen, 2, n));
}

TEST_CASE("levelled-partition oracle agrees with the wall description") {
    CHECK(free_proto_dims_level_oracle(DimSeq::delta(2, 4), 2, 3) == 6);
    CHECK(free_proto_dims_level_oracle(DimSeq::delta(1, 2), 3, 1) == 1); // the 3-tower
    DimSeq gen = parse_dimseq("1,2");
    for (int rho = 1; rho <= 3; ++rho)
        for (int n = 1; n <= 4; ++n)
            CHECK(free_proto_dims_level_oracle(gen, rho, n) == free_proto_dims(gen, rho, n));
    CHECK_FALSE(checks::free_dims_agreement(3, 4).has_value());
}

TEST_CASE("level oracle reproduces the generator at weight one") {
    DimSeq gen = parse_dimseq("2,5,1,3");
    for (int n = 1; n <= 4; ++n) CHECK(free_proto_dims_level_oracle(gen, 1, n) == gen.at(n));
}

TEST_CASE("free dims guard their enumeration budget") {
    CHECK_THROWS_AS(free_proto_dims(DimSeq::delta(2, 4), 7, 2), Error);
    CHECK_THROWS_AS(free_proto_dims_level_oracle(DimSeq::delta(2, 4), 5, 2), Error);
}
