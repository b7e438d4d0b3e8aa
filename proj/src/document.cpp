#include "neuralcode/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "neuralcode/errors.hpp"
#include "neuralcode/format.hpp"

namespace neuralcode {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return trim(hash == std::string_view::npos ? s : s.substr(0, hash));
}

int parse_int(std::string_view s, int line, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" +
                               std::string(s) + "'");
  return value;
}

Mask neuron(int i, int n, int line) {
  if (i < 1 || i > n)
    throw ParseError(line, "neuron " + std::to_string(i) + " is outside [" +
                               std::to_string(n) + "]");
  return neuron_bit(i);
}

Codeword parse_word(std::string_view tok, int n, int line) {
  if (tok.front() == '{') {
    if (tok.back() != '}') throw ParseError(line, "unterminated '{'");
    std::string_view body = trim(tok.substr(1, tok.size() - 2));
    Mask bits = 0;
    while (!body.empty()) {
      auto comma = body.find(',');
      bits |= neuron(parse_int(body.substr(0, comma), line, "in brace list"), n, line);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (trim(body).empty()) throw ParseError(line, "trailing ',' in brace list");
    }
    return Codeword{bits};
  }
  const bool binary = std::all_of(tok.begin(), tok.end(), [](char c) { return c == '0' || c == '1'; });
  if (binary && tok.size() == static_cast<std::size_t>(n)) {
    Mask bits = 0;
    for (int i = 0; i < n; ++i)
      if (tok[i] == '1') bits |= neuron_bit(i + 1);
    return Codeword{bits};
  }
  const bool digits = std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '1' && c <= '9'; });
  if (digits) {
    if (n > 9) throw ParseError(line, "digit words need n <= 9; use {i,j,...} for '" + std::string(tok) + "'");
    Mask bits = 0;
    for (char c : tok) bits |= neuron(c - '0', n, line);
    return Codeword{bits};
  }
  throw ParseError(line, "unrecognized codeword '" + std::string(tok) + "'");
}

}  // namespace

CodeDocument parse_document(std::string_view text, std::string source) {
  CodeDocument doc;
  doc.source = std::move(source);
  std::set<Codeword> seen;
  int line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  for (bool more = true; more;) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    more = nl != std::string_view::npos;
    pos = more ? nl + 1 : text.size();
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    if (!have_header) {
      if (line.substr(0, 1) != "n" || line.find('=') == std::string_view::npos ||
          !trim(line.substr(1, line.find('=') - 1)).empty())
        throw ParseError(line_no, "first line must be 'n=<k>'");
      doc.n = parse_int(line.substr(line.find('=') + 1), line_no, "for n");
      if (doc.n < 1 || doc.n > kMaxNeurons)
        throw ParseError(line_no, "n must be between 1 and " + std::to_string(kMaxNeurons));
      have_header = true;
      continue;
    }
    Codeword w = parse_word(line, doc.n, line_no);
    if (!seen.insert(w).second) {
      doc.warnings.push_back("line " + std::to_string(line_no) + ": duplicate codeword " +
                             format_codeword(w, doc.n) + " ignored");
      continue;
    }
    doc.words.push_back(w);
  }
  if (!have_header) throw ParseError(line_no, "missing 'n=<k>' header");
  return doc;
}

Code parse_code(std::string_view text, std::vector<std::string>* warnings) {
  CodeDocument doc = parse_document(text);
  if (warnings) *warnings = doc.warnings;
  const int last_line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) +
                        (text.empty() || text.back() == '\n' ? 0 : 1);
  try {
    return Code(doc.n, std::move(doc.words));
  } catch (const InvalidCode& e) {
    throw ParseError(std::max(last_line, 1), e.what());
  }
}

std::string render_code(const Code& code) {
  std::string out = "n=" + std::to_string(code.n()) + "\n";
  for (Codeword w : code.words()) {
    for (int i = 1; i <= code.n(); ++i) out += w.contains(i) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace neuralcode
