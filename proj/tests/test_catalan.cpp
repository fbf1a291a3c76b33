#include <gtest/gtest.h>

#include <set>

#include <nchopf/catalan.hpp>
#include <nchopf/verify.hpp>

using namespace nchopf;

namespace {

const Tree Yt = Tree::Y();

// M_k by filtering all of {0..k}^k.
std::vector<MTuple> mtuples_brute(int k)
{
    std::vector<MTuple> out;
    MTuple m(static_cast<std::size_t>(k), 0);
    while (true) {
        int partial = 0;
        bool ok = true;
        for (int h = 1; h <= k; ++h) {
            partial += m[static_cast<std::size_t>(h - 1)];
            if (h < k && partial < h)
                ok = false;
        }
        if (ok && partial == k)
            out.push_back(m);
        int i = k - 1;
        while (i >= 0 && m[static_cast<std::size_t>(i)] == k)
            m[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++m[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace

TEST(MTuples, SmallSets)
{
    EXPECT_EQ(enumerate_mtuples(1), (std::vector<MTuple>{{1}}));
    EXPECT_EQ(enumerate_mtuples(2), (std::vector<MTuple>{{1, 1}, {2, 0}}));
    EXPECT_EQ(enumerate_mtuples(3).size(), 5u);
    EXPECT_THROW(enumerate_mtuples(0), std::invalid_argument);
}

TEST(MTuples, MatchBruteForce)
{
    for (int k = 1; k <= 7; ++k)
        EXPECT_EQ(enumerate_mtuples(k), mtuples_brute(k)) << k;
}

TEST(MTuples, CatalanCountsToTwelve)
{
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int k = 1; k <= 12; ++k)
        EXPECT_EQ(static_cast<long>(enumerate_mtuples(k).size()), catalan[k]) << k;
}

TEST(MTuples, Membership)
{
    EXPECT_TRUE(is_mtuple({4, 0, 1, 0, 0, 2, 1, 0}));
    EXPECT_FALSE(is_mtuple({0, 2}));
    EXPECT_FALSE(is_mtuple({1, 2}));
    EXPECT_FALSE(is_mtuple({3, -1, 0}));
    EXPECT_FALSE(is_mtuple({}));
}

TEST(Decompose, Examples)
{
    EXPECT_EQ(decompose({2, 0}), std::nullopt);
    EXPECT_EQ(decompose({4, 0, 1, 0, 0, 2, 1, 0}), std::optional<int>(5));
    EXPECT_EQ(decompose({1, 1, 1}), std::optional<int>(1));
    EXPECT_THROW(decompose({0, 2}), std::invalid_argument);
}

TEST(Phi, Examples)
{
    EXPECT_EQ(phi({1}), Yt);
    EXPECT_EQ(phi({2, 1, 0}), over(under(Yt, Yt), Yt));
    EXPECT_EQ(to_text(phi({2, 1, 0})), "((L (L L)) L)");
    EXPECT_EQ(phi({4, 0, 1, 0, 0}), over(over(under(over(Yt, Yt), Yt), Yt), Yt));
    const Tree left = over(over(under(over(Yt, Yt), Yt), Yt), Yt);
    const Tree right = over(under(Yt, Yt), Yt);
    EXPECT_EQ(phi({4, 0, 1, 0, 0, 2, 1, 0}), under(left, right));
    EXPECT_THROW(phi({0, 2}), std::invalid_argument);
}

TEST(Psi, Examples)
{
    EXPECT_EQ(psi(Yt), MTuple{1});
    EXPECT_EQ(psi(over(under(Yt, Yt), Yt)), (MTuple{2, 1, 0}));
    const Tree left = over(over(under(over(Yt, Yt), Yt), Yt), Yt);
    const Tree right = over(under(Yt, Yt), Yt);
    EXPECT_EQ(psi(under(left, right)), (MTuple{4, 0, 1, 0, 0, 2, 1, 0}));
    EXPECT_THROW(psi(Tree::leaf()), std::invalid_argument);
}

TEST(Bijection, PhiIsInjectiveOntoYk)
{
    for (int k = 1; k <= 8; ++k) {
        std::set<std::string> images;
        for (const MTuple& m : enumerate_mtuples(k)) {
            const Tree t = phi(m);
            EXPECT_EQ(t.nodes(), k);
            images.insert(t.code());
        }
        EXPECT_EQ(images.size(), enumerate_trees(k).size()) << k;
    }
}

TEST(Bijection, RoundTripsToTen)
{
    Checker ck("unit");
    checks::catalan_bijection(ck, 10, 10);
    const SuiteReport r = ck.take();
    const CheckResult* bad = r.first_failure();
    EXPECT_EQ(bad, nullptr) << (bad ? bad->id + ": " + bad->detail : "");
    EXPECT_EQ(enumerate_trees(10).size(), 16796u);
}

TEST(TupleText, ParseAndFormat)
{
    EXPECT_EQ(parse_tuple("4,0,1,0,0,2,1,0"), (MTuple{4, 0, 1, 0, 0, 2, 1, 0}));
    EXPECT_EQ(parse_tuple("(2, 1, 0)"), (MTuple{2, 1, 0}));
    EXPECT_EQ(format_tuple({2, 1, 0}), "2,1,0");
    EXPECT_THROW(parse_tuple("2,,1"), std::invalid_argument);
    EXPECT_THROW(parse_tuple("a"), std::invalid_argument);
}
