#pragma once

#include <json.hpp>

#include <string>

#include "lextab/hopf.hpp"
#include "lextab/tableaux.hpp"

namespace lextab {

// Tableaux serialize with row 1 (the bottom row) first; the text rendering
// prints the top row first, French convention.
nlohmann::json tableau_to_json(const Tableau& t);
std::string tableau_to_text(const Tableau& t);

// Series coefficients serialize as integer or "p/q" strings.
nlohmann::json series_to_json(const FormalSeries& s);
std::string series_to_text(const FormalSeries& s);

// CSV: first row and column are composition labels in canonical order;
// the corner cell carries the kind name.
std::string matrix_to_csv(const TransitionMatrix& m);
nlohmann::json matrix_to_json(const TransitionMatrix& m);
std::string matrix_to_text(const TransitionMatrix& m);

} // namespace lextab
