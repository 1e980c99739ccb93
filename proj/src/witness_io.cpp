#include "chevbg/witness_io.hpp"

#include <json.hpp>

#include "chevbg/errors.hpp"
#include "chevbg/word_io.hpp"

namespace chevbg {

using ordered_json = nlohmann::ordered_json;

std::string witness_to_json(const FactorizationWitness& wit) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["dimension"] = wit.target.dim();
  doc["ring"] = {{"k", wit.target.ring().vars}, {"coeff", wit.target.ring().coeff.to_string()}};
  ordered_json target = ordered_json::array();
  for (const auto& e : wit.target.entries()) target.push_back(e.to_string());
  doc["target"] = std::move(target);
  ordered_json word = ordered_json::array();
  for (const auto& g : wit.word.gens()) word.push_back(format_gen(g));
  doc["word"] = std::move(word);
  doc["claimed_bound"] = wit.claimed_bound;
  doc["verified"] = to_string(wit.verified);
  return doc.dump(2) + "\n";
}

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t t = 0; t + 1 < byte && t < text.size(); ++t) {
    if (text[t] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const ordered_json& field(const ordered_json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(std::string("witness: missing field '") + name + "'");
  }
  return doc.at(name);
}

}  // namespace

FactorizationWitness witness_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw ParseError(std::string("witness: malformed JSON: ") + e.what(), line, col);
  }
  try {
    if (field(doc, "schema").get<int>() != kSchemaVersion) {
      throw Error("witness: unsupported schema version");
    }
    const auto n = field(doc, "dimension").get<std::size_t>();
    const auto& ring_doc = field(doc, "ring");
    const Ring ring{CoeffSpec::parse(field(ring_doc, "coeff").get<std::string>()),
                    field(ring_doc, "k").get<std::size_t>()};

    const auto& target_doc = field(doc, "target");
    if (!target_doc.is_array() || target_doc.size() != n * n) {
      throw Error("witness: target must hold dimension^2 entries");
    }
    SqMatrix target(n, ring);
    for (std::size_t t = 0; t < n * n; ++t) {
      target.set(t / n, t % n, parse_poly(target_doc[t].get<std::string>(), ring));
    }

    Word word(n, ring);
    std::size_t index = 0;
    for (const auto& tok : field(doc, "word")) {
      ++index;
      try {
        const Word parsed = parse_word(tok.get<std::string>(), n, ring);
        word.append(parsed);
      } catch (const ParseError& e) {
        throw Error("witness: word token " + std::to_string(index) + ": " + e.what());
      }
    }
    FactorizationWitness wit{std::move(target), std::move(word),
                             field(doc, "claimed_bound").get<std::size_t>(),
                             verified_from_string(field(doc, "verified").get<std::string>()),
                             {}};
    return wit;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("witness: ") + e.what());
  }
}

}  // namespace chevbg
