#pragma once

// Sparse rational linear combinations over a monoid basis, and their tensor powers.
//
// A basis type B participates by specialising basis_traits<B> with
//   static B unit();
//   static B multiply(const B&, const B&);
//   static long degree(const B&);
// and by providing a strict weak order operator< that is the canonical print order.
// Zero coefficients are never stored, so equality is structural.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nchopf {

template <class B>
struct basis_traits;

template <class B>
concept MonoidBasis = requires(const B& x, const B& y) {
    { basis_traits<B>::unit() } -> std::convertible_to<B>;
    { basis_traits<B>::multiply(x, y) } -> std::convertible_to<B>;
    { basis_traits<B>::degree(x) } -> std::convertible_to<long>;
    { x < y } -> std::convertible_to<bool>;
    { x == y } -> std::convertible_to<bool>;
};

/// Element of the monoid algebra Q[B]: a finite sum of basis elements with rational coefficients.
template <MonoidBasis B>
class Poly {
public:
    using basis_type = B;
    using term_map = std::map<B, Rational>;

    Poly() = default;
    Poly(const Rational& scalar)   // NOLINT(google-explicit-constructor): scalars embed via the unit
    {
        add_term(basis_traits<B>::unit(), scalar);
    }

    static Poly monomial(B b, const Rational& c = 1)
    {
        Poly p;
        p.add_term(std::move(b), c);
        return p;
    }

    void add_term(const B& b, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const term_map& terms() const& noexcept { return terms_; }
    // By value on rvalues, so range-for over a temporary does not dangle.
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const B& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(basis_traits<B>::unit()); }

    Poly homogeneous_component(long d) const
    {
        Poly out;
        for (const auto& [b, c] : terms_)
            if (basis_traits<B>::degree(b) == d)
                out.terms_.emplace(b, c);
        return out;
    }

    /// Largest degree of a stored term; -1 for the zero element.
    long max_degree() const
    {
        long d = -1;
        for (const auto& [b, c] : terms_)
            d = std::max(d, basis_traits<B>::degree(b));
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        long d = basis_traits<B>::degree(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return basis_traits<B>::degree(t.first) == d; });
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (const auto& [b, c] : o.terms_)
            add_term(b, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_)
            c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly out;
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_)
                out.add_term(basis_traits<B>::multiply(x, y), cx * cy);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    term_map terms_;
};

template <MonoidBasis B>
Poly<B> power(const Poly<B>& p, unsigned k)
{
    Poly<B> out(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * p;
    return out;
}

/// Extends a basis map B -> Poly<C> linearly.
template <MonoidBasis B, class F>
auto linear_map(const Poly<B>& p, F&& f) -> decltype(f(std::declval<const B&>()))
{
    using Out = decltype(f(std::declval<const B&>()));
    Out out;
    for (const auto& [b, c] : p.terms())
        out += f(b) * c;
    return out;
}

/// Canonical order on tuples of basis elements: total degree, then slot-wise.
template <MonoidBasis B>
struct TupleLess {
    bool operator()(const std::vector<B>& x, const std::vector<B>& y) const
    {
        long dx = 0, dy = 0;
        for (const auto& b : x)
            dx += basis_traits<B>::degree(b);
        for (const auto& b : y)
            dy += basis_traits<B>::degree(b);
        if (dx != dy)
            return dx < dy;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

/// Element of Q[B]^{⊗rank}. Rank 0 tensors are scalars (single empty tuple key).
template <MonoidBasis B>
class Tensor {
public:
    using basis_type = B;
    using key_type = std::vector<B>;
    using term_map = std::map<key_type, Rational, TupleLess<B>>;

    explicit Tensor(std::size_t rank = 2) : rank_(rank) {}

    static Tensor pure(key_type slots, const Rational& c = 1)
    {
        Tensor t(slots.size());
        t.add_term(std::move(slots), c);
        return t;
    }

    /// The unit 1⊗...⊗1 of the given rank.
    static Tensor unit(std::size_t rank)
    {
        return pure(key_type(rank, basis_traits<B>::unit()));
    }

    static Tensor scalar(const Rational& c)
    {
        Tensor t(0);
        t.add_term({}, c);
        return t;
    }

    static Tensor from_poly(const Poly<B>& p)
    {
        Tensor t(1);
        for (const auto& [b, c] : p.terms())
            t.add_term({b}, c);
        return t;
    }

    /// Pure tensor product of polynomials, p_0 ⊗ p_1 ⊗ ...
    static Tensor product_of(const std::vector<Poly<B>>& factors)
    {
        Tensor t = unit(0);
        for (const auto& f : factors)
            t = t.append(f);
        return t;
    }

    /// this ⊗ p, rank + 1.
    Tensor append(const Poly<B>& p) const
    {
        Tensor out(rank_ + 1);
        for (const auto& [k, c] : terms_)
            for (const auto& [b, cb] : p.terms()) {
                key_type key = k;
                key.push_back(b);
                out.add_term(std::move(key), c * cb);
            }
        return out;
    }

    std::size_t rank() const noexcept { return rank_; }
    const term_map& terms() const& noexcept { return terms_; }
    // By value on rvalues, so range-for over a temporary does not dangle.
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(key_type key, const Rational& c)
    {
        if (key.size() != rank_)
            throw std::invalid_argument("tensor term of rank " + std::to_string(key.size()) +
                                        " added to rank " + std::to_string(rank_) + " tensor");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(const key_type& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Rank-1 tensors back to polynomials.
    Poly<B> to_poly() const
    {
        if (rank_ != 1)
            throw std::invalid_argument("to_poly requires a rank 1 tensor");
        Poly<B> p;
        for (const auto& [k, c] : terms_)
            p.add_term(k[0], c);
        return p;
    }

    /// Rank-0 tensors back to scalars.
    Rational to_scalar() const
    {
        if (rank_ != 0)
            throw std::invalid_argument("to_scalar requires a rank 0 tensor");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Tensor& operator+=(const Tensor& o)
    {
        check_rank(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        check_rank(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    Tensor& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
    friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
    friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }

    /// Slot-wise product in Q[B]^{⊗rank}.
    friend Tensor operator*(const Tensor& a, const Tensor& b)
    {
        a.check_rank(b);
        Tensor out(a.rank_);
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_) {
                key_type key(a.rank_);
                for (std::size_t i = 0; i < a.rank_; ++i)
                    key[i] = basis_traits<B>::multiply(x[i], y[i]);
                out.add_term(std::move(key), cx * cy);
            }
        return out;
    }

    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    void check_rank(const Tensor& o) const
    {
        if (o.rank_ != rank_)
            throw std::invalid_argument("tensor rank mismatch: " + std::to_string(rank_) + " vs " +
                                        std::to_string(o.rank_));
    }

    std::size_t rank_;
    term_map terms_;
};

template <MonoidBasis B>
Tensor<B> tensor_mul(const Tensor<B>& s, const Tensor<B>& t)
{
    return s * t;
}

/// Applies a linear map L: Q[B] -> Q[B]^{⊗image_rank} to one slot. The result has
/// rank() - 1 + image_rank slots; the image is spliced in place of the slot.
template <MonoidBasis B, class F>
Tensor<B> apply_in_slot(const Tensor<B>& t, std::size_t slot, std::size_t image_rank, F&& f)
{
    if (slot >= t.rank())
        throw std::out_of_range("slot " + std::to_string(slot) + " out of range for rank " +
                                std::to_string(t.rank()) + " tensor");
    Tensor<B> out(t.rank() - 1 + image_rank);
    for (const auto& [key, c] : t.terms()) {
        const Tensor<B> image = f(key[slot]);
        if (image.rank() != image_rank)
            throw std::invalid_argument("slot map returned a tensor of unexpected rank");
        for (const auto& [ikey, ic] : image.terms()) {
            typename Tensor<B>::key_type nk;
            nk.reserve(out.rank());
            nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
            nk.insert(nk.end(), ikey.begin(), ikey.end());
            nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
            out.add_term(std::move(nk), c * ic);
        }
    }
    return out;
}

/// Slot map into the same algebra (rank preserved).
template <MonoidBasis B, class F>
Tensor<B> apply_poly_in_slot(const Tensor<B>& t, std::size_t slot, F&& f)
{
    return apply_in_slot(t, slot, 1, [&](const B& b) { return Tensor<B>::from_poly(f(b)); });
}

/// Slot map to scalars, e.g. a counit (rank decreases by one).
template <MonoidBasis B, class F>
Tensor<B> apply_scalar_in_slot(const Tensor<B>& t, std::size_t slot, F&& f)
{
    return apply_in_slot(t, slot, 0, [&](const B& b) { return Tensor<B>::scalar(f(b)); });
}

/// Multiplies slots i and i+1 together (the algebra product m in that position).
template <MonoidBasis B>
Tensor<B> multiply_slots(const Tensor<B>& t, std::size_t i)
{
    if (i + 1 >= t.rank())
        throw std::out_of_range("multiply_slots: slot pair out of range");
    Tensor<B> out(t.rank() - 1);
    for (const auto& [key, c] : t.terms()) {
        typename Tensor<B>::key_type nk;
        nk.reserve(out.rank());
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s == i) {
                nk.push_back(basis_traits<B>::multiply(key[i], key[i + 1]));
                ++s;
            } else {
                nk.push_back(key[s]);
            }
        }
        out.add_term(std::move(nk), c);
    }
    return out;
}

/// out slot s holds input slot order[s].
template <MonoidBasis B>
Tensor<B> permute_slots(const Tensor<B>& t, const std::vector<std::size_t>& order)
{
    if (order.size() != t.rank())
        throw std::invalid_argument("permute_slots: permutation size differs from rank");
    Tensor<B> out(t.rank());
    for (const auto& [key, c] : t.terms()) {
        typename Tensor<B>::key_type nk(key.size());
        for (std::size_t s = 0; s < order.size(); ++s)
            nk[s] = key.at(order[s]);
        out.add_term(std::move(nk), c);
    }
    return out;
}

/// Applies a basis map B -> Poly<C> in every slot: (f ⊗ ... ⊗ f).
template <MonoidBasis B, class F>
auto map_each_slot(const Tensor<B>& t, F&& f)
{
    using Out = decltype(f(std::declval<const B&>()));
    using C = typename Out::basis_type;
    Tensor<C> out(t.rank());
    for (const auto& [key, c] : t.terms()) {
        std::vector<Out> factors;
        factors.reserve(key.size());
        for (const auto& b : key)
            factors.push_back(f(b));
        out += Tensor<C>::product_of(factors) * c;
    }
    return out;
}

} // namespace nchopf
