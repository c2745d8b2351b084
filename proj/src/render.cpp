#include "alcor/render.hpp"

namespace alcor {

namespace {

void append_names(std::string& out, const char* label, const std::vector<std::string>& names) {
  out += "  ";
  out += label;
  out += ":";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += names[i];
  }
  if (names.empty()) out += " ";
  out += ";\n";
}

void append_vocab(std::string& out, const Vocabulary& v) {
  out += "vocab {\n";
  append_names(out, "concepts", v.concept_names());
  append_names(out, "roles", v.role_names());
  append_names(out, "individuals", v.individual_names());
  out += "}\n";
}

}  // namespace

std::string render(const WeightedKb& kb) {
  std::string out;
  append_vocab(out, kb.vocab);
  if (!kb.tbox.empty()) {
    out += "tbox {\n";
    for (const auto& t : kb.tbox)
      out += "  " + to_string(t.gci) + " [" + t.weight.to_string() + "];\n";
    out += "}\n";
  }
  if (!kb.abox.empty()) {
    out += "abox {\n";
    for (const auto& a : kb.abox)
      out += "  " + to_string(a.assertion) + " [" + a.weight.to_string() + "];\n";
    out += "}\n";
  }
  return out;
}

std::string render(const DefeasibleKb& kb) {
  std::string out;
  append_vocab(out, kb.vocab);
  if (!kb.tbox.empty()) {
    out += "tbox {\n";
    for (const auto& t : kb.tbox) out += "  " + to_string(t) + ";\n";
    out += "}\n";
  }
  out += "dbox {\n";
  for (const auto& e : kb.dbox) {
    out += "  " + to_string(e);
    if (e.impact) out += " [" + std::to_string(*e.impact) + "]";
    out += ";\n";
  }
  out += "}\n";
  if (!kb.abox.empty()) {
    out += "abox {\n";
    for (const auto& a : kb.abox) out += "  " + to_string(a) + ";\n";
    out += "}\n";
  }
  return out;
}

std::string render(const ParsedKb& kb) {
  return std::visit([](const auto& k) { return render(k); }, kb);
}

}  // namespace alcor
