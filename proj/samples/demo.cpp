// A short tour: antipode tables, the tree embedding, the tuple/tree bijection and
// compositional inversion through the antipode.

#include <iostream>

#include <nchopf/nchopf.hpp>

using namespace nchopf;

int main()
{
    std::cout << "Antipode of H^dif\n";
    for (int n = 1; n <= 4; ++n)
        std::cout << "  S a" << n << " = " << format(antipode_closed(n)) << "\n";

    std::cout << "\nCoproduct and coaction\n";
    std::cout << "  Δ a3 = " << format(coproduct_dif(gen(3))) << "\n";
    std::cout << "  δ b3 = " << format_slots(coaction_dif(gen(3)), {'b', 'a'}) << "\n";

    std::cout << "\nTrees: Δ^α t_2\n  " << format(coproduct_alpha(t_sum(2))) << "\n";

    const MTuple m{4, 0, 1, 0, 0, 2, 1, 0};
    const Tree t = phi(m);
    std::cout << "\nΦ(" << format_tuple(m) << ") = " << to_text(t) << "\n";
    std::cout << "Ψ of that tree = (" << format_tuple(psi(t)) << ")\n";

    RationalAlgebra q;
    const auto f = Series<RationalAlgebra>::from_tail(q, SeriesKind::Diffeo, {1, 0, 0, 0, 0, 0});
    std::cout << "\nInverse of x + x^2 through the antipode\n" << format_series(compositional_inverse_via_antipode(f));

    MatrixAlgebra mat;
    const Matrix z = mat.zero();
    auto diffeo = [&](const Matrix& c1) {
        return Series<MatrixAlgebra>::from_tail(mat, SeriesKind::Diffeo, {c1, z, z});
    };
    const auto a = associator(diffeo(mat.elementary(1, 2)), diffeo(mat.elementary(2, 1)), diffeo(mat.elementary(1, 1)));
    std::cout << "\nAssociator of x + E12 x^2, x + E21 x^2, x + E11 x^2 at x^4: " << format_value(mat, a[3]) << "\n";
}
