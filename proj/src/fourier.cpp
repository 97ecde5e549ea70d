#include "bohr/fourier.hpp"

#include <stdexcept>

namespace bohr {

GroupFunction GroupFunction::scalar(const std::vector<Complex>& vals) {
    GroupFunction f;
    f.group_order = static_cast<int>(vals.size());
    f.values.reserve(vals.size());
    for (auto v : vals) {
        Matrix m(1, 1);
        m(0, 0) = v;
        f.values.push_back(m);
    }
    return f;
}

GroupFunction GroupFunction::constant(int group_order, Complex c) {
    return scalar(std::vector<Complex>(group_order, c));
}

GroupFunction GroupFunction::conjugate() const {
    GroupFunction f;
    f.group_order = group_order;
    f.values.reserve(values.size());
    for (const auto& m : values) f.values.push_back(m.conjugate());
    return f;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

FourierCoefficients fourier_transform(const GroupFunction& f, const DualList& d) {
    if (f.group_order != d.group_order)
        throw std::invalid_argument("group/dual mismatch in fourier_transform");
    const int v = f.value_dim();
    FourierCoefficients out;
    out.value_dim = v;
    out.coeffs.reserve(d.size());
    for (int n = 0; n < d.size(); ++n) {
        const Irrep& rep = d.at(n);
        Matrix acc = Matrix::Zero(v * rep.dim, v * rep.dim);
        for (int x = 0; x < f.group_order; ++x) {
            const Matrix adj = rep.at(x).adjoint();
            if (v == 1)
                acc += f.values[x](0, 0) * adj;
            else
                acc += kron(f.values[x], adj);
        }
        out.coeffs.push_back(acc / static_cast<double>(f.group_order));
    }
    return out;
}

Matrix transform_at(const GroupFunction& f, const Irrep& rep) {
    if (!f.is_scalar()) throw std::invalid_argument("transform_at expects scalar f");
    Matrix acc = Matrix::Zero(rep.dim, rep.dim);
    for (int x = 0; x < f.group_order; ++x) acc += f.values[x](0, 0) * rep.at(x).adjoint();
    return acc / static_cast<double>(f.group_order);
}

Matrix inverse_transform(const FourierCoefficients& c, const DualList& d, int x) {
    if (static_cast<int>(c.coeffs.size()) != d.size())
        throw std::invalid_argument("coefficient list does not match the dual");
    const int v = c.value_dim;
    Matrix out = Matrix::Zero(v, v);
    for (int n = 0; n < d.size(); ++n) {
        const Irrep& rep = d.at(n);
        const Matrix& block = c.at(n);
        if (block.rows() != static_cast<Eigen::Index>(v) * rep.dim)
            throw std::invalid_argument("coefficient block dimension mismatch at irrep " +
                                        std::to_string(n));
        if (v == 1) {
            out(0, 0) += static_cast<double>(rep.dim) * (block * rep.at(x)).trace();
        } else {
            const Matrix m = block * kron(Matrix::Identity(v, v), rep.at(x));
            // partial trace over the representation slot
            for (int a = 0; a < v; ++a)
                for (int b = 0; b < v; ++b) {
                    Complex t = 0;
                    for (int k = 0; k < rep.dim; ++k) t += m(a * rep.dim + k, b * rep.dim + k);
                    out(a, b) += static_cast<double>(rep.dim) * t;
                }
        }
    }
    return out;
}

ParsevalPair parseval(const GroupFunction& f, const DualList& d) {
    if (!f.is_scalar()) throw std::invalid_argument("parseval expects scalar f");
    ParsevalPair p;
    for (int x = 0; x < f.group_order; ++x) p.lhs += std::norm(f.values[x](0, 0));
    p.lhs /= static_cast<double>(f.group_order);
    const FourierCoefficients c = fourier_transform(f, d);
    for (int n = 0; n < d.size(); ++n)
        p.rhs += d.at(n).dim * (c.at(n).adjoint() * c.at(n)).trace().real();
    return p;
}

Matrix conj_transform(const GroupFunction& f, const Irrep& rep) {
    if (!f.is_scalar()) throw std::invalid_argument("conj_transform expects scalar f");
    const Matrix via_contragredient = transform_at(f, contragredient(rep)).conjugate();
    const Matrix via_conjugate_f = transform_at(f.conjugate(), rep);
    const double defect = (via_contragredient - via_conjugate_f).cwiseAbs().maxCoeff();
    if (defect > 1e-10)
        throw std::runtime_error("conj_transform self-check failed: routes differ by " +
                                 std::to_string(defect));
    return via_contragredient;
}

}  // namespace bohr
