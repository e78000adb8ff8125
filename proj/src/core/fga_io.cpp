#include "core/fga_io.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace fgc {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

} // namespace

GroupEndo parse_fga(std::istream& in) {
  std::string line;
  std::optional<Alphabet> alphabet;
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  std::vector<bool> seen, inv_seen;
  bool in_inverse = false;

  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (toks[0] == "letters:") {
      if (alphabet) fail("duplicate letters: header");
      alphabet.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
      int n = alphabet->rank();
      images.assign(static_cast<std::size_t>(n), Word{});
      inverse_images.assign(static_cast<std::size_t>(n), Word{});
      seen.assign(static_cast<std::size_t>(n), false);
      inv_seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    if (toks[0] == "inverse:") {
      if (!alphabet) fail("inverse: before letters:");
      in_inverse = true;
      continue;
    }
    if (!alphabet) fail("expected letters: header first");
    if (toks.size() < 2 || toks[1] != "->") fail("expected '<gen> -> <word>'");

    Letter lhs = alphabet->parse_token(toks[0]);
    if (is_inverse_letter(lhs)) fail("rules must be stated for generators, not inverses");
    int g = lhs >> 1;
    Word image;
    for (std::size_t i = 2; i < toks.size(); ++i) image.push_back(alphabet->parse_token(toks[i]));
    if (image.empty()) fail("empty image for '" + toks[0] + "'");
    if (!is_reduced(image)) fail("image of '" + toks[0] + "' is not reduced");

    auto& slot_seen = in_inverse ? inv_seen : seen;
    if (slot_seen[static_cast<std::size_t>(g)]) fail("duplicate rule for '" + toks[0] + "'");
    slot_seen[static_cast<std::size_t>(g)] = true;
    (in_inverse ? inverse_images : images)[static_cast<std::size_t>(g)] = std::move(image);
  }

  if (!alphabet) throw ParseError("missing letters: header");
  for (int i = 0; i < alphabet->rank(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw ParseError("missing rule for '" + alphabet->generator_name(i) + "'");

  GroupEndo phi(*alphabet, std::move(images));
  bool any_inv = false, all_inv = true;
  for (int i = 0; i < alphabet->rank(); ++i) {
    any_inv = any_inv || inv_seen[static_cast<std::size_t>(i)];
    all_inv = all_inv && inv_seen[static_cast<std::size_t>(i)];
  }
  if (any_inv && !all_inv) throw ParseError("inverse block must cover every generator");
  if (all_inv && alphabet->rank() > 0 && any_inv) phi.inverse_images() = std::move(inverse_images);
  return phi;
}

GroupEndo parse_fga_text(const std::string& text) {
  std::istringstream in(text);
  return parse_fga(in);
}

GroupEndo load_fga(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_fga(in);
}

std::string format_fga(const GroupEndo& phi) {
  const Alphabet& a = phi.alphabet();
  std::ostringstream out;
  out << "letters:";
  for (int i = 0; i < a.rank(); ++i) out << ' ' << a.generator_name(i);
  out << '\n';
  for (int i = 0; i < a.rank(); ++i)
    out << a.generator_name(i) << " -> " << format_word(a, phi.generator_image(i)) << '\n';
  if (phi.inverse_images()) {
    out << "inverse:\n";
    for (int i = 0; i < a.rank(); ++i)
      out << a.generator_name(i) << " -> "
          << format_word(a, (*phi.inverse_images())[static_cast<std::size_t>(i)]) << '\n';
  }
  return out.str();
}

} // namespace fgc
