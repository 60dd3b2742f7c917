#include "lextab/io.hpp"

#include <algorithm>
#include <sstream>

namespace lextab {

nlohmann::json tableau_to_json(const Tableau& t) {
    nlohmann::json j;
    j["shape"] = t.shape.parts();
    j["rows"] = t.rows;  // row 1 (bottom) first
    return j;
}

std::string tableau_to_text(const Tableau& t) {
    int width = 1;
    for (const Word& row : t.rows)
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream out;
    for (std::size_t r = t.rows.size(); r-- > 0;) {  // top row first
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out << ' ';
            std::string cell = std::to_string(t.rows[r][c]);
            out << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

} // namespace

nlohmann::json series_to_json(const FormalSeries& s) {
    nlohmann::json j;
    j["basis"] = basis_name(s.basis());
    j["terms"] = nlohmann::json::array();
    for (const auto& [alpha, c] : s.terms())
        j["terms"].push_back({{"alpha", alpha.parts()}, {"coeff", rational_str(c)}});
    return j;
}

std::string series_to_text(const FormalSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : s.terms()) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "- ";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        if (coeff != 1) out << rational_str(coeff) << ' ';
        out << basis_name(s.basis()) << '[' << alpha.str() << ']';
        first = false;
    }
    return out.str();
}

std::string matrix_to_csv(const TransitionMatrix& m) {
    std::ostringstream out;
    out << matrix_kind_name(m.kind);
    for (const Composition& c : m.index) out << ',' << c.str();
    out << '\n';
    for (std::size_t i = 0; i < m.index.size(); ++i) {
        out << m.index[i].str();
        for (std::size_t j = 0; j < m.index.size(); ++j) out << ',' << m.entries[i][j].get_str();
        out << '\n';
    }
    return out.str();
}

nlohmann::json matrix_to_json(const TransitionMatrix& m) {
    nlohmann::json j;
    j["kind"] = matrix_kind_name(m.kind);
    j["n"] = m.n;
    j["index"] = nlohmann::json::array();
    for (const Composition& c : m.index) j["index"].push_back(c.str());
    j["entries"] = nlohmann::json::array();
    for (const auto& row : m.entries) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Integer& e : row) jrow.push_back(e.get_str());
        j["entries"].push_back(std::move(jrow));
    }
    return j;
}

std::string matrix_to_text(const TransitionMatrix& m) {
    std::vector<std::size_t> widths(m.index.size() + 1, 0);
    widths[0] = matrix_kind_name(m.kind).size();
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < m.index.size(); ++i) {
        widths[0] = std::max(widths[0], m.index[i].str().size());
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.index.size(); ++j) {
            row.push_back(m.entries[i][j].get_str());
            widths[j + 1] = std::max({widths[j + 1], row.back().size(), m.index[j].str().size()});
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) {
        out << std::string(w - s.size(), ' ') << s;
    };
    pad(matrix_kind_name(m.kind), widths[0]);
    for (std::size_t j = 0; j < m.index.size(); ++j) {
        out << "  ";
        pad(m.index[j].str(), widths[j + 1]);
    }
    out << '\n';
    for (std::size_t i = 0; i < m.index.size(); ++i) {
        pad(m.index[i].str(), widths[0]);
        for (std::size_t j = 0; j < m.index.size(); ++j) {
            out << "  ";
            pad(cells[i][j], widths[j + 1]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace lextab
