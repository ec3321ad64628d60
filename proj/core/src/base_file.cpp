#include "numbase/base_file.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "numbase/error.hpp"

namespace numbase {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

enum class FileFormat { Terms, Bounds, CyclicBounds };

FileFormat parse_header(std::string_view line) {
  std::istringstream in{std::string(trim(line))};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() == 1 && words[0] == "format=terms") return FileFormat::Terms;
  if (words.size() == 1 && words[0] == "format=bounds") return FileFormat::Bounds;
  if (words.size() == 2 && words[0] == "format=bounds" && words[1] == "cyclic") {
    return FileFormat::CyclicBounds;
  }
  throw Error(Errc::SyntaxError,
              "line 1: expected 'format=terms', 'format=bounds' or 'format=bounds cyclic', got '" +
                  std::string(trim(line)) + "'",
              1);
}

}  // namespace

BaseSequence parse_base_file(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Natural> values;
  std::optional<FileFormat> format;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (!format) {
      format = parse_header(raw);
      continue;
    }
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      values.push_back(Natural::from_decimal(line));
    } catch (const Error&) {
      throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": '" +
                                         std::string(line) + "' is not a decimal natural",
                  line_no);
    }
  }

  switch (*format) {
    case FileFormat::Terms:
      return make_explicit(std::move(values));
    case FileFormat::Bounds:
      if (values.empty()) throw Error(Errc::InvalidParameter, "bounds file lists no bounds");
      return make_mixed_radix(MixedRadixSpec::finite(std::move(values)));
    case FileFormat::CyclicBounds:
      return make_mixed_radix(MixedRadixSpec::cyclic(std::move(values)));
  }
  throw Error(Errc::SyntaxError, "unreachable base file format");
}

BaseSequence load_base_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidParameter, "cannot open base file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_base_file(buf.str());
}

}  // namespace numbase
