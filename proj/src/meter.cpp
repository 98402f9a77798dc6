#include "lamred/meter.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "lamred/term.hpp"

namespace lamred {

void Meter::record_term(Kind k) {
  ++term_counts[static_cast<std::size_t>(k)];
}

void Meter::reset() {
  term_counts.fill(0);
  dummy_count = binding_count = 0;
  beta_steps = reading_steps = 0;
}

long long Meter::total_nodes() const {
  long long n = 0;
  for (long long c : term_counts) n += c;
  return n;
}

long long Meter::total_bytes(const ByteModel& model) const {
  long long bytes = 0;
  for (int k = 0; k < kTermKindCount; ++k)
    bytes += term_counts[k] * model.term_words[k] * model.word;
  bytes += dummy_count * model.dummy_words * model.word;
  bytes += binding_count * model.binding_words * model.word;
  return bytes;
}

ByteModel ByteModel::from_env() {
  const char* spec = std::getenv("LAMRED_BYTE_MODEL");
  if (spec == nullptr || *spec == '\0') return defaults();
  return parse(spec);
}

ByteModel ByteModel::parse(const std::string& spec) {
  ByteModel m;
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::stringstream ss(spec);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    pair = trim(pair);
    if (pair.empty()) continue;
    auto eq = pair.find('=');
    if (eq == std::string::npos)
      throw Error("byte model entry '" + pair + "' is not kind=words");
    std::string key = trim(pair.substr(0, eq));
    int value = 0;
    try {
      value = std::stoi(pair.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("byte model entry '" + pair + "' has a bad number");
    }
    if (value <= 0) throw Error("byte model sizes must be positive");
    if (key == "word") m.word = value;
    else if (key == "Const") m.term_words[0] = value;
    else if (key == "FreeVar") m.term_words[1] = value;
    else if (key == "BoundIdx") m.term_words[2] = value;
    else if (key == "App") m.term_words[3] = value;
    else if (key == "Lam") m.term_words[4] = value;
    else if (key == "Susp") m.term_words[5] = value;
    else if (key == "Indirection") m.term_words[6] = value;
    else if (key == "Dummy") m.dummy_words = value;
    else if (key == "Binding") m.binding_words = value;
    else throw Error("byte model has unknown kind '" + key + "'");
  }
  return m;
}

std::string ByteModel::describe() const {
  std::ostringstream os;
  os << "word=" << word;
  static const char* names[kTermKindCount] = {
      "Const", "FreeVar", "BoundIdx", "App", "Lam", "Susp", "Indirection"};
  for (int k = 0; k < kTermKindCount; ++k)
    os << "," << names[k] << "=" << term_words[k];
  os << ",Dummy=" << dummy_words << ",Binding=" << binding_words;
  return os.str();
}

}  // namespace lamred
