#include "sigmaper/mapfile.hpp"

#include "sigmaper/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace sigma {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Message of an Error without its "Name: " prefix.
std::string bare(const Error& e) {
  std::string w = e.what();
  auto pos = w.find(": ");
  return pos == std::string::npos ? w : w.substr(pos + 2);
}

SPoint point_at(const std::string& text, int line) {
  try {
    return SPoint::parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), bare(e), line);
  }
}

bool written_as_base(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  return s.size() > 2 && s[0] == 'B' && SPoint::parse(s).is_real();
}

}  // namespace

Lifting parse_map(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<int> degree;
  std::vector<NodeSpec> nodes;
  std::map<std::string, std::size_t> by_name;
  std::map<std::string, int> image_line;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (kw == "degree") {
      std::string d;
      ls >> d;
      std::string extra;
      if (d.empty() || (ls >> extra)) throw Error(ErrorCode::SyntaxError, "expected 'degree <d>'", line);
      if (degree) throw Error(ErrorCode::SyntaxError, "degree given twice", line);
      try {
        Q q = parse_q(d);
        if (!is_integer(q)) throw Error(ErrorCode::SyntaxError, "degree must be an integer", line);
        degree = static_cast<int>(to_long(q.get_num()));
      } catch (const Error& e) {
        throw Error(ErrorCode::SyntaxError, bare(e), line);
      }
    } else if (kw == "node") {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected 'node <name> = <point>'", line);
      std::string name = trim(s.substr(4, eq - 4));
      std::string pt = trim(s.substr(eq + 1));
      if (name.empty() || name.find_first_of(" \t") != std::string::npos)
        throw Error(ErrorCode::SyntaxError, "bad node name '" + name + "'", line);
      if (by_name.count(name)) throw Error(ErrorCode::DuplicateNode, "node name " + name + " used twice", line);
      NodeSpec spec;
      spec.name = name;
      spec.point = point_at(pt, line);
      spec.written_as_base = written_as_base(pt);
      spec.line = line;
      by_name[name] = nodes.size();
      nodes.push_back(spec);
    } else if (kw == "image") {
      auto arrow = s.find("->");
      if (arrow == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected 'image <name> -> <point>'", line);
      std::string name = trim(s.substr(5, arrow - 5));
      auto it = by_name.find(name);
      if (it == by_name.end()) throw Error(ErrorCode::SyntaxError, "image for unknown node '" + name + "'", line);
      if (image_line.count(name)) throw Error(ErrorCode::SyntaxError, "second image for node " + name, line);
      nodes[it->second].image = point_at(trim(s.substr(arrow + 2)), line);
      image_line[name] = line;
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown keyword '" + kw + "'", line);
    }
  }
  if (!degree) throw Error(ErrorCode::SyntaxError, "missing 'degree' line", line);
  for (const auto& n : nodes)
    if (!image_line.count(n.name)) throw Error(ErrorCode::SyntaxError, "node " + n.name + " has no image", n.line);
  return build_lifting(*degree, nodes);
}

Lifting load_map(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_map(ss.str());
}

std::string to_map_text(const Lifting& F) {
  std::ostringstream os;
  os << "degree " << F.degree() << "\n";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < F.nodes().size(); ++i) {
    const auto& n = F.nodes()[i];
    names.push_back(n.name.empty() ? "n" + std::to_string(i) : n.name);
    os << "node " << names.back() << " = " << n.point.str() << "\n";
  }
  for (std::size_t i = 0; i < F.nodes().size(); ++i)
    os << "image " << names[i] << " -> " << F.nodes()[i].image.str() << "\n";
  return os.str();
}

}  // namespace sigma
