#include "steinerlab/schwarzenberger.hpp"

#include <random>
#include <stdexcept>

namespace steinerlab {

Matrix MultiplicationTensor::flattened() const {
    Matrix m(field, sL * sU, sLU);
    for (std::size_t i = 0; i < sL; ++i)
        for (std::size_t j = 0; j < sU; ++j)
            for (std::size_t k = 0; k < sLU; ++k) m.set(i * sU + j, k, at(i, j, k));
    return m;
}

MultiplicationTensor binary_tensor(int a, int n, FieldSpec field) {
    if (a < 1 || n < 1) throw std::invalid_argument("binary_tensor: require a, n >= 1");
    MultiplicationTensor t(field, a + 1, n + 1, a + n + 1);
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= n; ++j) t.set(i, j, i + j, Scalar(1));
    return t;
}

MultiplicationTensor veronese_tensor(FieldSpec field) {
    // Degree-lex monomials of degree 2 in x0 > x1 > x2:
    // x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
    auto mono_index = [](int i, int j) {
        if (i > j) std::swap(i, j);
        static const int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
        return table[i][j];
    };
    MultiplicationTensor t(field, 3, 3, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.set(i, j, mono_index(i, j), Scalar(1));
    return t;
}

MultiplicationTensor scroll_tensor(int a, int n1, int n2, FieldSpec field) {
    if (a < 1 || n1 < 1 || n2 < 1) throw std::invalid_argument("scroll_tensor: require a, n1, n2 >= 1");
    const std::size_t sU = n1 + n2 + 2;
    const std::size_t t1 = a + n1 + 1;
    MultiplicationTensor t(field, a + 1, sU, t1 + a + n2 + 1);
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= n1; ++j) t.set(i, j, i + j, Scalar(1));
        for (int j = 0; j <= n2; ++j) t.set(i, n1 + 1 + j, t1 + i + j, Scalar(1));
    }
    return t;
}

std::vector<std::vector<Scalar>> projective_grid(FieldSpec field, int n) {
    std::vector<std::vector<Scalar>> points;
    if (field.is_rationals()) {
        for (int i = 0; i <= n; ++i) {
            std::vector<Scalar> e(n + 1, Scalar(0));
            e[i] = Scalar(1);
            points.push_back(e);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::vector<Scalar> v(n + 1, Scalar(0));
                v[i] = Scalar(1);
                v[j] = Scalar(1);
                points.push_back(v);
            }
        points.push_back(std::vector<Scalar>(n + 1, Scalar(1)));
        return points;
    }
    const long p = field.p;
    double count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    if (count <= 1e4) {
        // All of P^n(F_p): normalized representatives, first nonzero = 1.
        for (int lead = 0; lead <= n; ++lead) {
            std::vector<long> tail(n - lead, 0);
            while (true) {
                std::vector<Scalar> v(n + 1, Scalar(0));
                v[lead] = Scalar(1);
                for (int k = 0; k < n - lead; ++k) v[lead + 1 + k] = Scalar(tail[k]);
                points.push_back(v);
                int k = n - lead - 1;
                while (k >= 0 && tail[k] == p - 1) tail[k--] = 0;
                if (k < 0) break;
                ++tail[k];
            }
        }
        return points;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15uL);
    std::uniform_int_distribution<long> dist(0, p - 1);
    while (points.size() < 64) {
        std::vector<Scalar> v(n + 1, Scalar(0));
        bool nonzero = false;
        for (int i = 0; i <= n; ++i) {
            long c = dist(rng);
            v[i] = Scalar(c);
            nonzero = nonzero || c != 0;
        }
        if (nonzero) points.push_back(v);
    }
    return points;
}

static VarietyProbe evaluation_probe(FieldSpec field, int dim, int h0,
                                     const std::vector<std::vector<Scalar>>& rows) {
    VarietyProbe probe;
    probe.dim_x = dim;
    probe.dim_sigma_x = dim;
    probe.sigma_generically_finite = true;
    for (const auto& r : rows) probe.sample_quotients.push_back(Matrix::from_rows(field, {r}));
    (void)h0;
    return probe;
}

SteinerDatum generic_schwarzenberger_datum(const MultiplicationTensor& tensor, int f0,
                                           const VarietyProbe& probe, FieldSpec field) {
    if (!tensor.is_surjective())
        throw std::invalid_argument(
            "generic_schwarzenberger_datum: multiplication tensor is not surjective "
            "(linear normality fails)");
    const int s = static_cast<int>(tensor.sL);
    const int h0 = static_cast<int>(tensor.sU);
    const int t = static_cast<int>(tensor.sLU);
    Matrix phi(field, static_cast<std::size_t>(s) * h0, t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < h0; ++j)
            for (int m = 0; m < t; ++m) phi.set(static_cast<std::size_t>(i) * h0 + j, m, tensor.at(i, j, m));
    SteinerDatum datum{field, s, t, f0, h0, std::move(phi), probe, "schwarzenberger generic"};
    ValidationReport report = validate(datum);
    if (!report.accepted) {
        std::string msg = "generic_schwarzenberger_datum: eta is not injective";
        if (report.failing_index >= 0)
            msg += " at probe point " + std::to_string(report.failing_index);
        for (const auto& e : report.shape_errors) msg += "; " + e;
        throw std::invalid_argument(msg);
    }
    return datum;
}

SteinerDatum binary_mult_datum(int a, int n, FieldSpec field) {
    MultiplicationTensor tensor = binary_tensor(a, n, field);
    VarietyProbe probe = evaluation_probe(field, n, n + 1, projective_grid(field, n));
    SteinerDatum d = generic_schwarzenberger_datum(tensor, 1, probe, field);
    d.label = "binary a=" + std::to_string(a) + " n=" + std::to_string(n);
    return d;
}

SteinerDatum veronese_datum(FieldSpec field) {
    MultiplicationTensor tensor = veronese_tensor(field);
    VarietyProbe probe = evaluation_probe(field, 2, 3, projective_grid(field, 2));
    SteinerDatum d = generic_schwarzenberger_datum(tensor, 1, probe, field);
    d.label = "veronese d=2";
    return d;
}

SteinerDatum scroll_datum(int a, int n1, int n2, FieldSpec field) {
    MultiplicationTensor tensor = scroll_tensor(a, n1, n2, field);
    // Z = P^1; the quotient at z stacks the evaluations of the two blocks of
    // degree-n1 / degree-n2 monomials at z, a rank 2 map.
    VarietyProbe probe;
    probe.dim_x = 1;
    probe.dim_sigma_x = 1;
    probe.sigma_generically_finite = true;
    const int h0 = n1 + n2 + 2;
    for (const auto& z : projective_grid(field, 1)) {
        Matrix q(field, 2, h0);
        for (int j = 0; j <= n1; ++j) {
            Scalar val(1);
            for (int k = 0; k < j; ++k) val *= z[1];
            for (int k = j; k < n1; ++k) val *= z[0];
            q.set(0, j, val);
        }
        for (int j = 0; j <= n2; ++j) {
            Scalar val(1);
            for (int k = 0; k < j; ++k) val *= z[1];
            for (int k = j; k < n2; ++k) val *= z[0];
            q.set(1, n1 + 1 + j, val);
        }
        probe.sample_quotients.push_back(std::move(q));
    }
    SteinerDatum d = generic_schwarzenberger_datum(tensor, 2, probe, field);
    d.label = "scroll a=" + std::to_string(a) + " (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
    return d;
}

MultiplicationTensor tensor_from_datum(const SteinerDatum& datum) {
    MultiplicationTensor t(datum.field, datum.s, datum.h0, datum.t);
    for (int i = 0; i < datum.s; ++i)
        for (int j = 0; j < datum.h0; ++j)
            for (int m = 0; m < datum.t; ++m)
                t.set(i, j, m, datum.phi.at(static_cast<std::size_t>(i) * datum.h0 + j, m));
    return t;
}

ValidationReport eta_injectivity_check(const SteinerDatum& datum) { return validate(datum); }

}  // namespace steinerlab
