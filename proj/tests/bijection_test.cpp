#include <gtest/gtest.h>

#include <unordered_set>

#include "continuum/bijection.hpp"
#include "oracles.hpp"

using namespace continuum;

namespace {

BinaryStream S(std::string_view text) { return parse_stream(text); }
std::string F(const BinaryStream& e) { return format_stream(e); }

// The k-th dyadic via the sorted-scan oracle, as a trailing-0 stream built from
// expansions_of.
std::vector<BinaryStream> t_by_scan(unsigned mu_max) {
    std::vector<BinaryStream> out;
    for (auto [den, num] : oracle::dyadics_by_scan(mu_max)) out.push_back(expansions_of(Rational(num, den))[0]);
    return out;
}

} // namespace

TEST(TEnumerate, Examples) {
    EXPECT_EQ(F(t_enumerate(0)), "1(0)");
    EXPECT_EQ(F(t_enumerate(1)), "01(0)");
    EXPECT_EQ(F(t_enumerate(8)), "0011(0)");
    EXPECT_EQ(t_enumerate(0), expansions_of(Rational(1, 2))[0]);
    EXPECT_EQ(t_enumerate(1), expansions_of(Rational(1, 4))[0]);
    EXPECT_EQ(value(t_enumerate(8)), Rational(3, 16));
}

TEST(SEnumerate, Examples) {
    EXPECT_EQ(F(s_enumerate(0)), "0(1)");
    EXPECT_EQ(s_enumerate(0), *dual_of(S("1(0)")));
    EXPECT_EQ(F(s_enumerate(4)), "010(1)");
    EXPECT_EQ(value(s_enumerate(4)), Rational(3, 8));
    for (int k = 0; k <= 100; ++k) EXPECT_EQ(value(s_enumerate(k)), value(t_enumerate(k)));
}

TEST(Enumerations, MatchScanOracleAndIndexBack) {
    const auto expected = t_by_scan(11);
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const BinaryStream t = t_enumerate(k), s = s_enumerate(k);
        EXPECT_EQ(t, expected[k]);
        EXPECT_EQ(s, *dual_of(expected[k]));
        EXPECT_EQ(classify_stream(t), StreamClass::InBX);
        EXPECT_EQ(classify_stream(s), StreamClass::InBS);
        EXPECT_EQ(t_index(t), k);
        EXPECT_EQ(s_index(s), k);
        EXPECT_FALSE(s_index(t));
        EXPECT_FALSE(t_index(s));
    }
}

TEST(TIndex, AcceptsNonCanonicalSpellings) {
    EXPECT_EQ(t_index(S("100(00)")), 0);
    EXPECT_EQ(s_index(S("01(11)")), 0);
    EXPECT_FALSE(t_index(S("(0)")));
    EXPECT_FALSE(s_index(S("(1)")));
    EXPECT_FALSE(t_index(S("(01)")));
}

TEST(Forward, Examples) {
    EXPECT_EQ(F(forward(S("1(0)"))), "0(1)");
    EXPECT_EQ(F(forward(S("001(0)"))), "01(0)");
    EXPECT_EQ(F(forward(S("(01)"))), "(01)");
    EXPECT_EQ(F(forward(S("(0)"))), "(0)");
    EXPECT_EQ(F(forward(S("(1)"))), "(1)");
}

TEST(Forward, RejectsBsStreams) {
    EXPECT_THROW(forward(S("0(1)")), DomainViolation);
    EXPECT_THROW(forward(S("0111(11)")), DomainViolation);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(F(inverse(S("0(1)"))), "1(0)");
    EXPECT_EQ(F(inverse(S("1(0)"))), "01(0)");
    EXPECT_EQ(F(inverse(S("(1)"))), "(1)");
    EXPECT_EQ(F(inverse(S("10(10)"))), "(10)");
}

TEST(ShiftMap, RoundTripsOnAllBoundedStreams) {
    for (const auto& e : oracle::raw_streams(10)) {
        const BinaryStream c = canonicalize(e);
        const BinaryStream back = inverse(e);
        EXPECT_NE(classify_stream(back), StreamClass::InBS);
        EXPECT_EQ(forward(back), c) << F(e);
        if (classify_stream(e) == StreamClass::InBX) {
            EXPECT_EQ(inverse(forward(e)), c) << F(e);
        }
    }
}

TEST(ShiftMap, BranchClasses) {
    for (int k = 0; k <= 1000; ++k) {
        EXPECT_EQ(classify_stream(forward(t_enumerate(2 * k))), StreamClass::InBS);
        EXPECT_EQ(classify_stream(forward(t_enumerate(2 * k + 1))), StreamClass::InBX);
    }
    EXPECT_EQ(classify_stream(forward(S("(011)"))), StreamClass::InBX);
}

TEST(ShiftMap, InjectiveOnInitialSegmentAndSample) {
    const int n = 500;
    std::unordered_set<BinaryStream> images;
    std::size_t inputs = 0;
    for (int k = 0; k <= 2 * n + 1; ++k, ++inputs) images.insert(forward(t_enumerate(k)));
    std::unordered_set<BinaryStream> rest;
    for (const auto& e : oracle::raw_streams(8)) {
        const BinaryStream c = canonicalize(e);
        if (classify_stream(c) == StreamClass::InBX && !t_index(c)) rest.insert(c);
    }
    for (const auto& c : rest) images.insert(forward(c));
    inputs += rest.size();
    EXPECT_EQ(images.size(), inputs);
}

// On T_E the map moves t_{2k} (the point d_{2k}) to s_k (the point d_k); on T_O it
// moves d_{2k+1} to d_k. Only k = 0 keeps the real number fixed.
TEST(ShiftMap, ValueEffectOfEachBranch) {
    for (int k = 0; k <= 200; ++k) {
        const Rational d_k = dyadic_at(k).value();
        EXPECT_EQ(value(forward(t_enumerate(2 * k))), d_k);
        EXPECT_EQ(value(forward(t_enumerate(2 * k + 1))), d_k);
        EXPECT_EQ(value(t_enumerate(2 * k)) == d_k, k == 0);
    }
}

TEST(MapConfig, DefaultTIsTrailingZeroDyadicsWithZeroBase) {
    MapConfig config;
    EXPECT_EQ(config.t_choice, MapConfig::TChoice::TrailingZeroDyadics);
    EXPECT_EQ(config.index_base, 0u);
}
