#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "aprel/dimacs.hpp"
#include "aprel/error.hpp"
#include "aprel/tptp.hpp"
#include "commands.hpp"

namespace aprel::cli {

namespace {

bool looks_like_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    char c = line[start];
    if (c == 'c' && (start + 1 == line.size() || std::isspace(static_cast<unsigned char>(line[start + 1])))) {
      continue;
    }
    return c == 'p' || c == '-' || std::isdigit(static_cast<unsigned char>(c));
  }
  return false;
}

InputFormat format_from_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".cnf" || ext == ".dimacs") return InputFormat::dimacs;
  if (ext == ".p" || ext == ".tptp" || ext == ".ax") return InputFormat::tptp;
  return InputFormat::automatic;
}

TptpOptions tptp_options(const std::filesystem::path& path) {
  TptpOptions options;
  if (const char* dir = std::getenv("APREL_TPTP_DIR"); dir != nullptr && *dir != '\0') {
    options.include_base = dir;
  } else if (path != "-") {
    options.include_base = path.parent_path();
  }
  return options;
}

std::vector<ClauseId> parse_id_list(std::string_view text, const std::string& origin) {
  std::vector<ClauseId> ids;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    char* end = nullptr;
    unsigned long value = std::strtoul(token.c_str(), &end, 10);
    if (*end != '\0' || value == 0) throw Error(origin + ": bad clause id '" + token + "'");
    ids.push_back(static_cast<ClauseId>(value));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return ids;
}

}  // namespace

ClauseSet load_input(const std::filesystem::path& path, InputFormat format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (format == InputFormat::automatic) format = format_from_extension(path);
  if (format == InputFormat::automatic) {
    format = looks_like_dimacs(text) ? InputFormat::dimacs : InputFormat::tptp;
  }
  std::string source = path == "-" ? "<stdin>" : path.string();
  if (format == InputFormat::dimacs) return parse_dimacs(text, source);
  return parse_tptp_cnf(text, tptp_options(path), source);
}

std::string default_support_spec(const ClauseSet& set) {
  if (set.format() == SourceFormat::tptp) {
    for (std::size_t pos = 0; pos < set.size(); ++pos) {
      if (set.origin(pos).role == Role::negated_conjecture) return "roles:negated_conjecture";
    }
  }
  return "polarity:all_negative";
}

std::vector<ClauseId> resolve_support(const ClauseSet& set, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("support spec '" + spec + "' lacks a kind");
  std::string kind = spec.substr(0, colon);
  std::string value = spec.substr(colon + 1);

  std::vector<ClauseId> ids;
  if (kind == "roles") {
    for (std::size_t pos = 0; pos < set.size(); ++pos) {
      if (role_name(set.origin(pos).role) == value) ids.push_back(set[pos].id());
    }
    if (value != "negated_conjecture" && value != "axiom" && value != "hypothesis") {
      throw Error("unknown role '" + value + "'");
    }
  } else if (kind == "polarity") {
    bool negative = value == "all_negative";
    if (!negative && value != "all_positive") throw Error("unknown polarity '" + value + "'");
    for (const auto& c : set) {
      auto lits = c.literals();
      bool match = std::all_of(lits.begin(), lits.end(),
                               [&](const Literal& l) { return l.positive != negative; });
      if (match) ids.push_back(c.id());
    }
  } else if (kind == "ids") {
    ids = parse_id_list(value, "ids");
  } else if (kind == "file") {
    std::ifstream in(value);
    if (!in) throw Error("cannot open support file " + value);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ids = parse_id_list(text, value);
  } else {
    throw Error("unknown support kind '" + kind + "'");
  }

  for (ClauseId id : ids) {
    if (!set.contains(id)) throw Error("support clause " + std::to_string(id) + " is not in the input");
  }
  ids = normalize_ids(std::move(ids));
  if (ids.empty()) throw Error("support '" + spec + "' selects no clause");
  return ids;
}

}  // namespace aprel::cli
