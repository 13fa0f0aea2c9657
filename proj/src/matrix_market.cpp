#include "trispec/matrix_market.hpp"

#include <sstream>
#include <stdexcept>

namespace trispec {

namespace {
constexpr const char* kBanner = "%%MatrixMarket matrix coordinate integer general";
}

void write_matrix_market(std::ostream& out, const IntMatrix& m, const std::string& comment) {
    out << kBanner << '\n';
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line)) out << "% " << line << '\n';
    }
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) out << r + 1 << ' ' << c + 1 << ' ' << m(r, c) << '\n';
}

IntMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::runtime_error("MatrixMarket: missing banner");
    {
        std::istringstream banner(line);
        std::string tag, object, format, field, symmetry;
        banner >> tag >> object >> format >> field >> symmetry;
        if (object != "matrix" || format != "coordinate" || field != "integer" || symmetry != "general")
            throw std::runtime_error("MatrixMarket: only 'matrix coordinate integer general' is supported");
    }
    do {
        if (!std::getline(in, line)) throw std::runtime_error("MatrixMarket: missing size line");
    } while (line.empty() || line[0] == '%');

    std::size_t rows = 0, cols = 0, nnz = 0;
    {
        std::istringstream size(line);
        if (!(size >> rows >> cols >> nnz)) throw std::runtime_error("MatrixMarket: malformed size line");
    }
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        long long v = 0;
        if (!(in >> r >> c >> v)) throw std::runtime_error("MatrixMarket: truncated entry list");
        if (r < 1 || r > rows || c < 1 || c > cols) throw std::runtime_error("MatrixMarket: index out of range");
        m(r - 1, c - 1) = v;
    }
    return m;
}

}  // namespace trispec
