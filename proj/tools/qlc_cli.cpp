#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlc/suite.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer for " + what + ": " + s);
  }
}

std::vector<qlc::Rat> parse_numeric_list(const std::string& s) {
  std::vector<qlc::Rat> out;
  std::string t = trim(s);
  if (t.empty() || t == "none") return out;
  for (const auto& piece : split(t, ',')) {
    std::string p = trim(piece);
    if (p.empty()) continue;
    try {
      qlc::Rat r(p);
      r.canonicalize();
      out.push_back(r);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational residue size: " + p);
    }
  }
  return out;
}

void parse_gram_range(qlc::GridConfig& grid, const std::string& s) {
  auto parts = split(trim(s), ':');
  if (parts.size() != 2)
    throw std::invalid_argument("Gram range must look like MIN:MAX");
  grid.v_min = parse_long(trim(parts[0]), "gram range");
  grid.v_max = parse_long(trim(parts[1]), "gram range");
}

void apply_config_entry(qlc::GridConfig& grid, const std::string& key,
                        const std::string& value) {
  if (key == "form_sign") {
    if (value == "both" || value == "0") {
      grid.form_sign = 0;
    } else {
      long v = parse_long(value, key);
      if (v != 1 && v != -1)
        throw std::invalid_argument("form_sign must be 1, -1, or both");
      grid.form_sign = static_cast<int>(v);
    }
  } else if (key == "n_max") {
    grid.n_max = parse_long(value, key);
  } else if (key == "e") {
    grid.e = parse_long(value, key);
  } else if (key == "v_min") {
    grid.v_min = parse_long(value, key);
  } else if (key == "v_max") {
    grid.v_max = parse_long(value, key);
  } else if (key == "chi_kinds") {
    grid.chi_kinds.clear();
    for (const auto& piece : split(value, ','))
      if (!trim(piece).empty()) grid.chi_kinds.push_back(trim(piece));
  } else if (key == "numeric_q") {
    grid.numeric_q = parse_numeric_list(value);
  } else if (key == "seed") {
    grid.seed = static_cast<unsigned long>(parse_long(value, key));
  } else {
    throw std::invalid_argument("unknown configuration key: " + key);
  }
}

void load_config(qlc::GridConfig& grid, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    apply_config_entry(grid, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact identity suites for the local constants of quaternionic dual "
      "pairs. Exit code: 0 all cases agree, 1 at least one mismatch, 2 "
      "usage or configuration error."};
  std::string suite = "all", format = "text", out_path, config_path;
  std::string gram_range, numeric_q;
  long n_max = 4, ord2 = 0;
  unsigned long long seed = 20260816;

  std::string suites_help = "suite to run: all";
  for (const auto& s : qlc::suite_names()) suites_help += ", " + s;
  app.add_option("--suite", suite, suites_help);
  app.add_option("--format", format, "output format: text, json, or csv");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--config", config_path, "flat key=value configuration file");
  app.add_option("--n-max", n_max, "largest dimension in the grids (0..12)");
  app.add_option("--ord2", ord2, "valuation of 2 in the base field");
  app.add_option("--gram-range", gram_range, "Gram valuation range MIN:MAX");
  app.add_option("--numeric-q", numeric_q,
                 "comma-separated residue sizes for the numeric layer, or "
                 "'none'");
  app.add_option("--seed", seed, "seed for the sampled conservation towers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    qlc::GridConfig grid;
    if (!config_path.empty()) load_config(grid, config_path);
    if (app.count("--n-max")) grid.n_max = n_max;
    if (app.count("--ord2")) grid.e = ord2;
    if (app.count("--gram-range")) parse_gram_range(grid, gram_range);
    if (app.count("--numeric-q")) grid.numeric_q = parse_numeric_list(numeric_q);
    if (app.count("--seed")) grid.seed = static_cast<unsigned long>(seed);

    std::vector<qlc::SuiteResult> rows = qlc::run_suite(suite, grid);

    std::ostringstream buf;
    if (format == "json")
      qlc::emit_json(rows, buf);
    else if (format == "csv")
      qlc::emit_csv(rows, buf);
    else if (format == "text")
      qlc::emit_text(rows, buf);
    else
      throw std::invalid_argument("unknown format: " + format);

    if (out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
      f << buf.str();
    }
    for (const auto& r : rows)
      if (!r.equal) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
