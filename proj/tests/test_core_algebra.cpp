#include <gtest/gtest.h>

#include <nchopf/core_algebra.hpp>
#include <nchopf/io.hpp>

using namespace nchopf;

namespace {

Word w(std::initializer_list<int> idx) { return Word::of(idx); }

NCPoly mono(std::initializer_list<int> idx, Rational c = 1) { return NCPoly::monomial(Word::of(idx), c); }

// All words with length <= 3 over indices 1..3.
std::vector<Word> small_words()
{
    std::vector<Word> out{Word()};
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> idx(static_cast<std::size_t>(len), 1);
        while (true) {
            out.push_back(Word::of(idx));
            int i = len - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == 3)
                idx[static_cast<std::size_t>(i--)] = 1;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

} // namespace

TEST(PolyMul, Concatenation)
{
    const NCPoly p = gen(1) * gen(2);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coefficient(w({1, 2})), 1);
    EXPECT_EQ(p.coefficient(w({2, 1})), 0);
}

TEST(PolyMul, Bilinear)
{
    EXPECT_EQ((gen(1) + gen(2)) * gen(1), mono({1, 1}) + mono({2, 1}));
    EXPECT_EQ(poly_mul(gen(1) * Rational(2), gen(1) * Rational(3)), mono({1, 1}, 6));
}

TEST(PolyMul, AssociativeWithUnitOnSmallWords)
{
    const auto ws = small_words();
    ASSERT_EQ(ws.size(), 1u + 3 + 9 + 27);
    const NCPoly one(1);
    for (const Word& x : ws) {
        const NCPoly px = NCPoly::monomial(x);
        EXPECT_EQ(px * one, px);
        EXPECT_EQ(one * px, px);
        for (const Word& y : ws) {
            const NCPoly py = NCPoly::monomial(y);
            EXPECT_EQ((px * py).max_degree(), x.degree() + y.degree());
            for (const Word& z : ws)
                ASSERT_EQ((px * py) * NCPoly::monomial(z), px * (py * NCPoly::monomial(z)));
        }
    }
}

TEST(PolyMul, ZeroCoefficientsAreDropped)
{
    NCPoly p = gen(1) + gen(2);
    p -= gen(1);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(Word, DegreeIsIndexSum)
{
    EXPECT_EQ(w({}).degree(), 0);
    EXPECT_EQ(w({1, 2}).degree(), 3);
    EXPECT_EQ(w({3, 1, 1}).degree(), 5);
}

TEST(TensorMul, Examples)
{
    const auto a1 = w({1});
    const TensorElement x = TensorElement::pure({a1, Word()});
    const TensorElement y = TensorElement::pure({Word(), a1});
    EXPECT_EQ(tensor_mul(x, y), TensorElement::pure({a1, a1}));
    EXPECT_EQ(tensor_mul(TensorElement::unit(2), x), x);
    EXPECT_EQ(tensor_mul(TensorElement::pure({a1, a1}), x), TensorElement::pure({w({1, 1}), a1}));
}

TEST(TensorMul, RankMismatchThrows)
{
    EXPECT_THROW(tensor_mul(TensorElement::unit(2), TensorElement::unit(3)), std::invalid_argument);
}

TEST(ApplyInSlot, RaisesRank)
{
    const auto a1 = w({1});
    const TensorElement t = TensorElement::pure({a1, Word()});
    // a_1 ↦ a_1⊗1 + 1⊗a_1, 1 ↦ 1⊗1
    auto delta = [](const Word& x) {
        TensorElement d = TensorElement::pure({x, Word()});
        if (!x.empty())
            d += TensorElement::pure({Word(), x});
        return d;
    };
    const TensorElement r = apply_in_slot(t, 0, 2, delta);
    EXPECT_EQ(r.rank(), 3u);
    EXPECT_EQ(r, TensorElement::pure({a1, Word(), Word()}) + TensorElement::pure({Word(), a1, Word()}));
}

TEST(ApplyInSlot, IdentityAndCounit)
{
    const TensorElement t = TensorElement::pure({w({1}), w({2})}) + TensorElement::pure({Word(), w({3})}, 2);
    EXPECT_EQ(apply_poly_in_slot(t, 1, [](const Word& x) { return NCPoly::monomial(x); }), t);
    const TensorElement e = apply_scalar_in_slot(TensorElement::pure({w({1}), w({2})}), 0,
                                                 [](const Word& x) { return x.empty() ? Rational(1) : Rational(0); });
    EXPECT_EQ(e.rank(), 1u);
    EXPECT_TRUE(e.is_zero());
}

TEST(ApplyInSlot, SlotOutOfRangeThrows)
{
    EXPECT_THROW(apply_poly_in_slot(TensorElement::unit(2), 2, [](const Word& x) { return NCPoly::monomial(x); }),
                 std::out_of_range);
}

TEST(Abelianize, MergesCommutingWords)
{
    EXPECT_EQ(abelianize(mono({1, 2}) + mono({2, 1})), comm_var(1) * comm_var(2) * Rational(2));
    EXPECT_EQ(abelianize(NCPoly(1)), CommPoly(1));
    const NCPoly s3 = -gen(3) + mono({1, 2}, 2) + mono({2, 1}, 3) - mono({1, 1, 1}, 5);
    EXPECT_EQ(abelianize(s3), -comm_var(3) + comm_var(1) * comm_var(2) * Rational(5) - comm_var(1, 3) * Rational(5));
}

TEST(Abelianize, Multiplicative)
{
    const auto ws = small_words();
    for (const Word& x : ws)
        for (const Word& y : ws) {
            const NCPoly px = NCPoly::monomial(x), py = NCPoly::monomial(y);
            ASSERT_EQ(abelianize(px * py), abelianize(px) * abelianize(py));
        }
}

TEST(HomogeneousComponent, Examples)
{
    EXPECT_EQ(homogeneous_component(mono({1, 2}), 3), mono({1, 2}));
    EXPECT_TRUE(homogeneous_component(mono({1, 2}), 2).is_zero());
    EXPECT_EQ(homogeneous_component(gen(1) + gen(2), 1), gen(1));
    const NCPoly p = NCPoly(3) + gen(1) + mono({1, 1}) + gen(2) - mono({2, 1});
    NCPoly sum;
    for (long d = 0; d <= p.max_degree(); ++d)
        sum += homogeneous_component(p, d);
    EXPECT_EQ(sum, p);
}

TEST(FreeProduct, Embed)
{
    const Word b1 = w({1}), b2 = w({2});
    const Word tagged({{1, 1}, {2, 2}});
    EXPECT_EQ(free_product_embed(TensorElement::pure({b1, b2})), NCPoly::monomial(tagged));
    EXPECT_EQ(free_product_embed(TensorElement::pure({Word(), b1})), NCPoly::monomial(Word({{1, 2}})));
    EXPECT_EQ(free_product_embed(TensorElement::pure({b1, Word()})), NCPoly::monomial(Word({{1, 1}})));
}

TEST(FreeProduct, Project)
{
    const Word x({{1, 1}, {2, 2}, {3, 1}});
    EXPECT_EQ(free_product_project(NCPoly::monomial(x), 2), TensorElement::pure({w({1, 3}), w({2})}));
    EXPECT_EQ(free_product_project(mono({2, 1}), 2), TensorElement::pure({w({2, 1}), Word()}));
    EXPECT_EQ(free_product_project(NCPoly(1), 2), TensorElement::unit(2));
    EXPECT_THROW(free_product_project(NCPoly::monomial(Word({{1, 3}})), 2), std::invalid_argument);
}

TEST(FreeProduct, ProjectAfterEmbedIsIdentity)
{
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            const TensorElement t = TensorElement::pure({i ? w({i}) : Word(), j ? Word::of({j}) : Word()});
            EXPECT_EQ(free_product_project(free_product_embed(t), 2), t) << i << "," << j;
        }
}

TEST(FreeProduct, ProjectIsMultiplicative)
{
    const NCPoly x = NCPoly::monomial(Word({{1, 1}, {2, 2}})) + NCPoly::monomial(Word({{3, 2}}));
    const NCPoly y = NCPoly::monomial(Word({{2, 2}, {1, 1}}));
    EXPECT_EQ(free_product_project(x * y, 2), free_product_project(x, 2) * free_product_project(y, 2));
}

TEST(CanonicalOrder, DegreeThenLengthThenLex)
{
    const NCPoly p = mono({1, 1, 1}) + mono({2, 1}) + mono({1, 2}) + gen(3) + NCPoly(1);
    std::vector<Word> order;
    for (const auto& [x, c] : p.terms())
        order.push_back(x);
    const std::vector<Word> expected{Word(), w({3}), w({1, 2}), w({2, 1}), w({1, 1, 1})};
    EXPECT_EQ(order, expected);
}

TEST(Text, FormatsCanonically)
{
    const NCPoly s3 = -gen(3) + mono({1, 2}, 2) + mono({2, 1}, 3) - mono({1, 1, 1}, 5);
    EXPECT_EQ(format(s3), "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3");
    EXPECT_EQ(format(NCPoly()), "0");
    EXPECT_EQ(format(NCPoly(Rational(-1, 2))), "-1/2");
    const TensorElement t = TensorElement::pure({w({2}), Word()}) + TensorElement::pure({w({1}), w({1})}, 2) +
                            TensorElement::pure({Word(), w({2})});
    EXPECT_EQ(format(t), "1 ⊗ a2 + 2 a1 ⊗ a1 + a2 ⊗ 1");
}

TEST(Text, ParseRoundTrip)
{
    const NCPoly s3 = -gen(3) + mono({1, 2}, 2) + mono({2, 1}, 3) - mono({1, 1, 1}, 5);
    EXPECT_EQ(parse_poly(format(s3)), s3);
    EXPECT_EQ(parse_poly("a1^2 a2 - 3/4"), mono({1, 1, 2}) - NCPoly(Rational(3, 4)));
    const TensorElement t = parse_tensor("1 ⊗ a2 + 2 a1 ⊗ a1 + a2 ⊗ 1");
    EXPECT_EQ(t.rank(), 2u);
    EXPECT_EQ(t.coefficient({w({1}), w({1})}), 2);
    EXPECT_EQ(parse_tensor(format(t)), t);
    EXPECT_THROW(parse_poly("a1 + + a2"), std::invalid_argument);
}

TEST(Json, RoundTrip)
{
    const NCPoly s3 = -gen(3) + mono({1, 2}, 2) + mono({2, 1}, Rational(3, 7));
    const json j = to_json(s3);
    EXPECT_EQ(j["rank"], 1);
    EXPECT_EQ(j["terms"][0]["word"], json::parse("[[3,1]]"));
    EXPECT_EQ(j["terms"][0]["coeff"], "-1");
    EXPECT_EQ(poly_from_json(j), s3);

    const TensorElement t =
        TensorElement::pure({w({1}), Word({{2, 2}})}, Rational(-5, 3)) + TensorElement::pure({Word(), w({4})});
    EXPECT_EQ(tensor_from_json(to_json(t)), t);
    EXPECT_EQ(tensor_from_json(json::parse(to_json(t).dump())), t);
}

TEST(Json, ErrorsNameTheField)
{
    try {
        poly_from_json(json::parse(R"({"rank":1,"terms":[{"word":[[1,1]],"coeff":"x"}]})"));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("coeff"), std::string::npos);
    }
    try {
        poly_from_json(json::parse(R"({"rank":1,"terms":[{"word":[[-1,1]],"coeff":"1"}]})"));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("word"), std::string::npos);
    }
}
