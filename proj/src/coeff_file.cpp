#include "crinv/coeff_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crinv/errors.hpp"

namespace crinv {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string f; is >> f;) out.push_back(f);
  return out;
}

int parse_index(const std::string& text, std::size_t line) {
  if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos)
    throw format_error("malformed exponent '" + text + "'", line);
  return std::stoi(text);
}

Rational parse_field(const std::string& text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw format_error("malformed rational '" + text + "'", line);
  }
}

std::string with_denominator(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

}  // namespace

TruncatedSeries read_coeff_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int order = -1;
  std::map<Exponent, GaussianRational> terms;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (order < 0) {
      if (fields.size() != 2 || fields[0] != "order") throw format_error("expected 'order N' header", lineno);
      order = parse_index(fields[1], lineno);
      continue;
    }
    if (fields.size() != 4) throw format_error("expected 'k l re im', got " + std::to_string(fields.size()) + " fields", lineno);
    const int k = parse_index(fields[0], lineno);
    const int l = parse_index(fields[1], lineno);
    if (k + l > order)
      throw format_error("degree " + std::to_string(k + l) + " exceeds order " + std::to_string(order), lineno);
    GaussianRational c(parse_field(fields[2], lineno), parse_field(fields[3], lineno));
    if (!terms.emplace(Exponent{k, l}, std::move(c)).second)
      throw format_error("duplicate exponent pair (" + std::to_string(k) + ", " + std::to_string(l) + ")", lineno);
  }
  if (order < 0) throw format_error("missing 'order N' header", lineno);
  return TruncatedSeries::from_terms(order, terms);
}

TruncatedSeries read_coeff_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path.string(), 0);
  return read_coeff_file(in);
}

void write_coeff_file(const TruncatedSeries& s, std::ostream& out) {
  out << "order " << s.order() << "\n";
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
      const auto& c = s.coeff(d - l, l);
      if (c.is_zero()) continue;
      out << (d - l) << " " << l << " " << with_denominator(c.real()) << " " << with_denominator(c.imag()) << "\n";
    }
}

void write_coeff_file(const TruncatedSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw format_error("cannot write " + path.string(), 0);
  write_coeff_file(s, out);
}

}  // namespace crinv
