#include <gtest/gtest.h>

#include <random>

#include <nchopf/hopf_dif.hpp>
#include <nchopf/series.hpp>
#include <nchopf/verify.hpp>

using namespace nchopf;

namespace {

using QSeries = Series<RationalAlgebra>;
using MSeries = Series<MatrixAlgebra>;
using Poly1 = std::vector<Rational>; // dense polynomial in x, index = exponent

const RationalAlgebra Q;
const MatrixAlgebra M2{2};

QSeries diffeo(std::vector<Rational> tail) { return QSeries::from_tail(Q, SeriesKind::Diffeo, tail); }
QSeries invertible(std::vector<Rational> tail) { return QSeries::from_tail(Q, SeriesKind::Invertible, tail); }

Poly1 mul(const Poly1& p, const Poly1& q, std::size_t len)
{
    Poly1 r(len, 0);
    for (std::size_t i = 0; i < p.size() && i < len; ++i)
        for (std::size_t j = 0; j < q.size() && i + j < len; ++j)
            r[i + j] += p[i] * q[j];
    return r;
}

// x-polynomial of a diffeomorphism: coefficient of x^{n+1} is φ_n.
Poly1 as_poly(const QSeries& s)
{
    Poly1 p(static_cast<std::size_t>(s.order) + 2, 0);
    for (int n = 0; n <= s.order; ++n)
        p[static_cast<std::size_t>(n) + 1] = s[n];
    return p;
}

// φ(ψ(x)) by expanding φ as a polynomial and substituting.
Poly1 compose_naive(const QSeries& phi, const QSeries& psi)
{
    const Poly1 f = as_poly(phi), g = as_poly(psi);
    const std::size_t len = f.size();
    Poly1 out(len, 0), pw(len, 0);
    pw[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
        pw = mul(pw, g, len);
        for (std::size_t i = 0; i < len; ++i)
            out[i] += f[k] * pw[i];
    }
    return out;
}

// Lagrange: [x^n] ψ = (1/n) [w^{n-1}] (w/φ(w))^n.
std::vector<Rational> lagrange_classical(const QSeries& phi)
{
    const std::size_t len = static_cast<std::size_t>(phi.order) + 1;
    // h(w) = φ(w)/w = 1 + φ_1 w + ..., then 1/h by triangular solve
    Poly1 h(len, 0), inv(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        h[i] = phi[static_cast<int>(i)];
    inv[0] = 1;
    for (std::size_t n = 1; n < len; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            inv[n] -= h[k] * inv[n - k];
    std::vector<Rational> psi;
    Poly1 pw(len, 0);
    pw[0] = 1;
    for (std::size_t n = 1; n <= len; ++n) {
        pw = mul(pw, inv, len);
        psi.push_back(pw[n - 1] / Rational(static_cast<long long>(n)));
    }
    return psi;
}

Matrix E(int i, int j) { return M2.elementary(i, j); }

} // namespace

TEST(SeriesMul, Examples)
{
    const QSeries f = invertible({1, 0}), g = invertible({-1, 0});
    EXPECT_EQ(series_mul(f, g).coeffs, (std::vector<Rational>{1, 0, -1}));
    const QSeries r = invertible({Rational(1, 2), 3, -7});
    EXPECT_EQ(series_mul(QSeries::identity(Q, SeriesKind::Invertible, 3), r), r);

    const MSeries mf = MSeries::from_tail(M2, SeriesKind::Invertible, {E(1, 2)});
    const MSeries mg = MSeries::from_tail(M2, SeriesKind::Invertible, {E(2, 1)});
    EXPECT_EQ(series_mul(mf, mg)[1], M2.add(E(1, 2), E(2, 1)));
}

TEST(SeriesMul, NonCommutativeOrderIsLeftToRight)
{
    NCPolyAlgebra alg;
    const auto f = Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Invertible, {gen(1), gen(2)});
    const auto g = Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Invertible, {gen(3), gen(4)});
    EXPECT_EQ(series_mul(f, g)[2], gen(2) + gen(1) * gen(3) + gen(4));
}

TEST(SeriesMul, MismatchThrows)
{
    EXPECT_THROW(series_mul(invertible({1}), invertible({1, 2})), std::invalid_argument);
    EXPECT_THROW(series_mul(invertible({1}), diffeo({1})), std::invalid_argument);
}

TEST(SeriesInv, Examples)
{
    NCPolyAlgebra alg;
    const auto f = Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Invertible, {gen(1), gen(2), gen(3)});
    const auto g = series_inv(f);
    EXPECT_EQ(g[1], -gen(1));
    EXPECT_EQ(g[2], -gen(2) + gen(1) * gen(1));
    EXPECT_EQ(g[3], -gen(3) + gen(1) * gen(2) + gen(2) * gen(1) - gen(1) * gen(1) * gen(1));
    const auto one = Series<NCPolyAlgebra>::identity(alg, SeriesKind::Invertible, 3);
    EXPECT_EQ(series_mul(f, g), one);
    EXPECT_EQ(series_mul(g, f), one);
    EXPECT_EQ(series_inv(QSeries::identity(Q, SeriesKind::Invertible, 4)),
              QSeries::identity(Q, SeriesKind::Invertible, 4));
}

TEST(SeriesCompose, Examples)
{
    const QSeries s = diffeo({1, 0, 0});
    EXPECT_EQ(series_compose(s, s).coeffs, (std::vector<Rational>{1, 2, 2, 1}));
    EXPECT_EQ(compose_naive(s, s), (Poly1{0, 1, 2, 2, 1}));
    const QSeries id = QSeries::identity(Q, SeriesKind::Diffeo, 3);
    const QSeries r = diffeo({Rational(2, 3), -1, 5});
    EXPECT_EQ(series_compose(r, id), r);
    EXPECT_EQ(series_compose(id, r), r);
    EXPECT_EQ(series_compose(diffeo({1, 0}), diffeo({1, 0}))[1], 2);
}

TEST(SeriesCompose, MatchesNaiveExpansion)
{
    checks::SeriesSampler smp(5);
    for (int i = 0; i < 20; ++i) {
        const auto phi = smp.series(Q, SeriesKind::Diffeo, 6, [&] { return smp.rational(); });
        const auto psi = smp.series(Q, SeriesKind::Diffeo, 6, [&] { return smp.rational(); });
        const Poly1 naive = compose_naive(phi, psi);
        const QSeries c = series_compose(phi, psi);
        for (int n = 0; n <= 6; ++n)
            ASSERT_EQ(c[n], naive[static_cast<std::size_t>(n) + 1]) << "sample " << i << " n=" << n;
    }
}

TEST(ResidueCompose, AgreesWithCompose)
{
    const QSeries s = diffeo({1, 0, 0});
    const QSeries id = QSeries::identity(Q, SeriesKind::Diffeo, 3);
    EXPECT_EQ(residue_compose(s, s), series_compose(s, s));
    EXPECT_EQ(residue_compose(id, s), s);
    EXPECT_EQ(residue_compose(s, id), s);
    const MSeries a = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(1, 2), E(2, 2), E(1, 1)});
    const MSeries b = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(2, 1), E(1, 2), E(2, 2)});
    EXPECT_EQ(residue_compose(a, b), series_compose(a, b));
}

TEST(Associator, MatrixLeadingTerm)
{
    const MSeries phi = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(1, 2), M2.zero(), M2.zero(), M2.zero()});
    const MSeries psi = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(2, 1), M2.zero(), M2.zero(), M2.zero()});
    const MSeries eta = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(1, 1), M2.zero(), M2.zero(), M2.zero()});
    const auto a = associator(phi, psi, eta);
    ASSERT_GE(a.size(), 4u);
    EXPECT_EQ(a[0], M2.zero());
    EXPECT_EQ(a[1], M2.zero());
    EXPECT_EQ(a[2], M2.zero());
    EXPECT_EQ(a[3], M2.neg(E(1, 1)));
    const auto same = associator(phi, phi, phi);
    EXPECT_EQ(same[3], M2.zero());
}

TEST(Associator, VanishesForRationals)
{
    const auto a = associator(diffeo({1, 2, 3, 4}), diffeo({-1, Rational(1, 2), 0, 2}), diffeo({3, 0, -2, 1}));
    for (const auto& c : a)
        EXPECT_EQ(c, 0);
}

TEST(CharacterEval, Examples)
{
    const QSeries phi = diffeo({2, 3});
    EXPECT_EQ(character_eval(gen(1) * gen(2), phi), 6);
    EXPECT_EQ(character_eval(NCPoly(1), phi), 1);
    EXPECT_EQ(character_eval(antipode_recursive(2), diffeo({1, 1})), 1);
    EXPECT_THROW(character_eval(gen(3), phi), std::invalid_argument);
}

TEST(CompositionalInverse, Examples)
{
    const QSeries s = diffeo({1, 0, 0, 0, 0});
    EXPECT_EQ(compositional_inverse_via_antipode(s).coeffs, (std::vector<Rational>{1, -1, 2, -5, 14, -42}));
    EXPECT_EQ(lagrange_oracle(s).coeffs, (std::vector<Rational>{1, -1, 2, -5, 14, -42}));
    const QSeries cube = diffeo({0, 1, 0, 0});
    EXPECT_EQ(compositional_inverse_via_antipode(cube).coeffs, (std::vector<Rational>{1, 0, -1, 0, 3}));
    const QSeries id = QSeries::identity(Q, SeriesKind::Diffeo, 5);
    EXPECT_EQ(compositional_inverse_via_antipode(id), id);
    EXPECT_EQ(lagrange_oracle(id), id);
}

TEST(CompositionalInverse, MatchesClassicalLagrange)
{
    checks::SeriesSampler smp(17);
    for (int i = 0; i < 20; ++i) {
        const auto phi = smp.series(Q, SeriesKind::Diffeo, 7, [&] { return smp.rational(); });
        const QSeries psi = compositional_inverse_via_antipode(phi);
        EXPECT_EQ(psi.coeffs, lagrange_classical(phi)) << i;
        const QSeries id = QSeries::identity(Q, SeriesKind::Diffeo, 7);
        EXPECT_EQ(series_compose(phi, psi), id);
        EXPECT_EQ(series_compose(psi, phi), id);
    }
}

TEST(CompositionalInverse, RejectsNonCommutative)
{
    const MSeries m = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(1, 2)});
    EXPECT_THROW(compositional_inverse_via_antipode(m), std::invalid_argument);
    EXPECT_THROW(lagrange_oracle(m), std::invalid_argument);
}

TEST(SeriesDuality, SuiteAtOrderEight)
{
    Checker ck("unit");
    checks::series_duality(ck, 8, 10, 3);
    const SuiteReport r = ck.take();
    const CheckResult* bad = r.first_failure();
    EXPECT_EQ(bad, nullptr) << (bad ? bad->id + ": " + bad->detail : "");
}

TEST(SeriesJson, RoundTrip)
{
    const MSeries m = MSeries::from_tail(M2, SeriesKind::Diffeo, {E(1, 2), M2.scale(Rational(-3, 4), E(2, 1))});
    const json j = series_to_json(m);
    EXPECT_EQ(j["kind"], "diffeo");
    EXPECT_EQ(j["algebra"]["type"], "matrix");
    EXPECT_EQ(j["coeffs"][0], json::parse(R"([["1","0"],["0","1"]])"));
    const AnySeries back = series_from_json(json::parse(j.dump()));
    ASSERT_TRUE(std::holds_alternative<MSeries>(back));
    EXPECT_EQ(std::get<MSeries>(back), m);

    NCPolyAlgebra alg;
    const auto p = Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Invertible, {gen(1), gen(1) * gen(2)});
    const AnySeries pb = series_from_json(series_to_json(p));
    EXPECT_EQ(std::get<Series<NCPolyAlgebra>>(pb), p);
}

TEST(SeriesJson, ErrorsNameTheField)
{
    auto message = [](const char* text) {
        try {
            series_from_json(json::parse(text));
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message(R"({"kind":"x","order":1,"algebra":{"type":"rational"},"coeffs":["1","2"]})").find("kind"),
              std::string::npos);
    EXPECT_NE(message(R"({"kind":"diffeo","order":1,"algebra":{"type":"rational"},"coeffs":["2","2"]})").find("coeffs"),
              std::string::npos);
    EXPECT_NE(message(R"({"kind":"diffeo","order":2,"algebra":{"type":"rational"},"coeffs":["1","2"]})").find("order"),
              std::string::npos);
    EXPECT_NE(message(R"({"kind":"diffeo","order":1,"algebra":{"type":"octonion"},"coeffs":["1","2"]})")
                  .find("algebra.type"),
              std::string::npos);
}
