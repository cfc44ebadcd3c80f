#include "rootcluster/generators_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "rootcluster/errors.hpp"

namespace rootcluster {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw DomainError("generator file line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  const std::string t = trim(token);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    fail(line, "expected a non-negative integer, got '" + t + "'");
  }
  return value;
}

}  // namespace

GeneratorFile parse_generators(std::istream& in) {
  GeneratorFile out;
  bool have_degree = false;
  bool seen_content = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
      if (seen_content) fail(line_no, "'n=' header must come before any permutation");
      const auto value = parse_number(line.substr(line.find('=') + 1), line_no);
      if (value == 0 || value > kMaxDegree) fail(line_no, "degree must be in 1..65535");
      out.degree = static_cast<std::size_t>(value);
      have_degree = true;
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<Label> images;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto value = parse_number(
          std::string_view(line).substr(start, comma == std::string::npos ? comma : comma - start),
          line_no);
      if (value > kMaxDegree) fail(line_no, "image out of range");
      images.push_back(static_cast<Label>(value));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!have_degree) {
      out.degree = images.size();
      have_degree = true;
    }
    if (images.size() != out.degree) {
      fail(line_no, "expected " + std::to_string(out.degree) + " images, got " +
                        std::to_string(images.size()));
    }
    try {
      out.generators.emplace_back(std::move(images));
    } catch (const DomainError& e) {
      fail(line_no, e.what());
    }
  }
  if (!have_degree) throw DomainError("generator file is empty");
  return out;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open generator file " + path.string());
  return parse_generators(in);
}

std::string format_generators(const GeneratorFile& file) {
  std::ostringstream os;
  os << "n=" << file.degree << '\n';
  for (const auto& g : file.generators) os << g.to_string() << '\n';
  return os.str();
}

}  // namespace rootcluster
