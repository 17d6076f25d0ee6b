#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vwalks/bijection.hpp"
#include "vwalks/stats.hpp"
#include "vwalks/tableau.hpp"
#include "vwalks/tw1.hpp"
#include "vwalks/words.hpp"

namespace vwalks {

// Word text: letters separated by spaces, "j" for a right step and "j~" for a
// left step ("1 2 1 2~ 1~ 1~").
std::string format_word(const WalkerWord& w);
std::string format_letters(const std::vector<Letter>& letters);
std::vector<Letter> parse_letters(const std::string& text);

// Array text: "4 5 6 / 1 3 2".
std::string format_array(const TwoLineArray& a);
TwoLineArray parse_array(const std::string& text);

// JSON forms. Letters: [[j,"R"],[j,"L"],...]; diagram: {shape, labels} with
// labels as [row, col, label] triples (1-indexed); array: {top, bottom};
// involution: {sigma}.
nlohmann::json letters_to_json(const std::vector<Letter>& letters);
std::vector<Letter> letters_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const NumberedDiagram& d);
NumberedDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json array_to_json(const TwoLineArray& a);
TwoLineArray array_from_json(const nlohmann::json& j);
nlohmann::json involution_to_json(const Involution& s);
Involution involution_from_json(const nlohmann::json& j);

// Single-line diagram rendering for traces: "(1 2 / 3)"; "()" when empty.
std::string format_diagram(const NumberedDiagram& d);

// Sample batch CSV: header + rows "N,seed,sample_index,L,chi".
void write_batch_csv(std::ostream& os, const SampleBatch& b);
SampleBatch read_batch_csv(std::istream& is);

// F1 table CSV: header + rows "x,F1".
void write_f1_csv(std::ostream& os, const F1Table& t);
// Reads the two-column form back; interpolation metadata is not persisted.
F1Table read_f1_csv(std::istream& is);

}  // namespace vwalks
