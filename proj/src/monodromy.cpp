#include "logpois/monodromy.hpp"
#include "logpois/errors.hpp"
#include "logpois/spectral.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <sstream>

namespace logpois {

ComplexMatrixF to_complex(const QiMatrix &m) {
    ComplexMatrixF out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) out(i, j) = m.at(i, j).to_complex();
    return out;
}

ComplexMatrixF meridional_character(const ResidueTuple &A,
                                    const std::vector<long> &m) {
    if (A.empty()) throw input_error("empty residue tuple");
    if (m.size() != A.size())
        throw input_error("meridian vector length must match the tuple");
    CommuteResult comm = check_commuting(A);
    if (!comm.ok)
        throw math_error("commuting-residues",
                         "meridional character needs commuting residues",
                         comm.witness.str());
    int e = A[0].rows();
    QiMatrix sum(e, e);
    for (size_t i = 0; i < A.size(); i++)
        sum = sum + A[i] * Scalar((long)m[i]);
    ComplexMatrixF arg =
        std::complex<double>(0.0, -2.0 * std::numbers::pi) * to_complex(sum);
    ComplexMatrixF out = arg.exp();
    if (!out.allFinite())
        throw input_error("matrix exponential produced a non-finite entry");
    return out;
}

ComplexMatrixF twisted_rep_eval(const std::map<std::string, ComplexMatrixF> &rho,
                                const ResidueTuple &A, const TwistedWord &w) {
    int e = A.empty() ? 0 : A[0].rows();
    for (auto &[name, mat] : rho) e = (int)mat.rows();
    ComplexMatrixF acc = ComplexMatrixF::Identity(e, e);
    for (const WordLetter &letter : w) {
        if (letter.kind == WordLetter::leaf) {
            auto it = rho.find(letter.generator);
            if (it == rho.end())
                throw input_error("unknown generator '" + letter.generator + "'");
            ComplexMatrixF img = it->second;
            if (letter.inverse) img = img.inverse().eval();
            acc = acc * img;
        } else {
            acc = acc * meridional_character(A, letter.m);
        }
    }
    return acc;
}

std::complex<double> transport_1d(const Scalar &a, long steps) {
    if (steps < 1000) throw input_error("transport needs at least 1000 steps");
    // pullback of -a dz/z along z = eps e^{i theta} is -i a dtheta
    std::complex<double> coeff =
        std::complex<double>(0.0, -1.0) * a.to_complex();
    auto f = [&](const std::complex<double> &y) { return coeff * y; };
    std::complex<double> y(1.0, 0.0);
    double h = 2.0 * std::numbers::pi / (double)steps;
    for (long s = 0; s < steps; s++) {
        std::complex<double> k1 = f(y);
        std::complex<double> k2 = f(y + 0.5 * h * k1);
        std::complex<double> k3 = f(y + 0.5 * h * k2);
        std::complex<double> k4 = f(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y; // y(0) = 1
}

std::string complex_str(const std::complex<double> &z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real();
    if (std::signbit(z.imag()))
        os << "-" << -z.imag() << "i";
    else
        os << "+" << z.imag() << "i";
    return os.str();
}

std::string complex_matrix_str(const ComplexMatrixF &m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); i++) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < m.cols(); j++) {
            if (j) os << ",";
            os << complex_str(m(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

TwistedWord parse_word(const std::string &text) {
    TwistedWord w;
    size_t start = 0;
    while (start <= text.size()) {
        size_t sep = text.find(';', start);
        std::string item = sep == std::string::npos
                               ? text.substr(start)
                               : text.substr(start, sep - start);
        if (!item.empty()) {
            if (item.rfind("leaf:", 0) == 0) {
                std::string rest = item.substr(5);
                WordLetter l{WordLetter::leaf, "", false, {}};
                size_t colon = rest.find(':');
                if (colon != std::string::npos) {
                    if (rest.substr(colon + 1) != "inv")
                        throw input_error("bad leaf letter '" + item + "'");
                    l.inverse = true;
                    rest = rest.substr(0, colon);
                }
                if (rest.empty()) throw input_error("empty generator name");
                l.generator = rest;
                w.push_back(std::move(l));
            } else if (item.rfind("mer:", 0) == 0) {
                WordLetter l{WordLetter::meridian, "", false, {}};
                std::string rest = item.substr(4);
                size_t p = 0;
                while (p <= rest.size()) {
                    size_t comma = rest.find(',', p);
                    std::string num = comma == std::string::npos
                                          ? rest.substr(p)
                                          : rest.substr(p, comma - p);
                    if (num.empty())
                        throw input_error("bad meridian letter '" + item + "'");
                    l.m.push_back(std::stol(num));
                    if (comma == std::string::npos) break;
                    p = comma + 1;
                }
                w.push_back(std::move(l));
            } else {
                throw input_error("unknown word letter '" + item + "'");
            }
        }
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return w;
}

} // namespace logpois
