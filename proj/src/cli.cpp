#include "pytree/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "pytree/diffpaths.hpp"
#include "pytree/kernels.hpp"

namespace pytree::cli {

namespace {

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Extra values are raw JSON; strings lose their quotes in CSV.
std::string unjson(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

enum class Format { Jsonl, Csv, Dot };

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}
  void write(const OutputRecord& r) {
    if (fmt_ == Format::Csv) {
      if (!header_done_) {
        out_ << csv_header(r) << '\n';
        header_done_ = true;
      }
      out_ << to_csv(r) << '\n';
    } else {
      out_ << to_jsonl(r) << '\n';
    }
  }

 private:
  std::ostream& out_;
  Format fmt_;
  bool header_done_ = false;
};

struct TripleArgs {
  std::string s, c, n;
};

// Parses and validates S C N. Returns the exit code on failure.
int read_triple(const TripleArgs& a, std::optional<PrimTriple>& t, std::ostream& err) {
  BigInt s, c, n;
  try {
    s = parse_bigint(a.s);
    c = parse_bigint(a.c);
    n = parse_bigint(a.n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  }
  try {
    t.emplace(s, c, n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

int read_difference(const std::string& text, BigInt& d, std::ostream& err) {
  try {
    d = parse_bigint(text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  }
  if (!is_odd(d)) {
    err << "error: " << d << " is even; coordinate differences S - C are always odd\n";
    return kInvalidInput;
  }
  return kOk;
}

void write_dot(std::ostream& out, std::size_t depth) {
  out << "digraph pytree {\n  node [shape=box];\n";
  std::uint64_t level_start = 0;  // id of the first node on the current level
  std::uint64_t prev_start = 0;
  std::uint64_t width = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    LevelIterator it(k);
    std::uint64_t j = 0;
    while (auto t = it.next()) {
      const std::uint64_t id = level_start + j;
      out << "  n" << id << " [label=\"" << t->s() << ',' << t->c() << ',' << t->n() << "\"];\n";
      if (k > 0) out << "  n" << prev_start + j / 3 << " -> n" << id << ";\n";
      ++j;
    }
    prev_start = level_start;
    level_start += width;
    width *= 3;
  }
  out << "}\n";
}

DiffForm form_from(const std::string& s) {
  if (s == "P") return DiffForm::P;
  if (s == "Q") return DiffForm::Q;
  return DiffForm::R;
}

}  // namespace

OutputRecord make_record(const PrimTriple& t, const TreePath& path) {
  const ParamPair p = params_from_triple(t);
  return {t.s(), t.c(), t.n(), p.m(), p.n(), path.size(), format_path(path),
          format_word(word_for(path)), {}};
}

OutputRecord make_record(const PrimTriple& t) { return make_record(t, locate(t)); }

std::string to_jsonl(const OutputRecord& r) {
  std::ostringstream os;
  os << "{\"s\":" << r.s << ",\"c\":" << r.c << ",\"n\":" << r.n << ",\"m\":" << r.m
     << ",\"n2\":" << r.n2 << ",\"level\":" << r.level << ",\"path\":" << json_string(r.path)
     << ",\"word\":" << json_string(r.word);
  for (const auto& [k, v] : r.extra) os << ',' << json_string(k) << ':' << v;
  os << '}';
  return os.str();
}

std::string csv_header(const OutputRecord& r) {
  std::string h = "s,c,n,m,n2,level,path,word";
  for (const auto& kv : r.extra) h += "," + kv.first;
  return h;
}

std::string to_csv(const OutputRecord& r) {
  std::ostringstream os;
  os << r.s << ',' << r.c << ',' << r.n << ',' << r.m << ',' << r.n2 << ',' << r.level << ','
     << csv_field(r.path) << ',' << csv_field(r.word);
  for (const auto& kv : r.extra) os << ',' << csv_field(unjson(kv.second));
  return os.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive Pythagorean triples as a ternary tree over Gamma(2)", "pytree"};
  app.require_subcommand(1);

  const std::map<std::string, Format> full_formats{
      {"jsonl", Format::Jsonl}, {"csv", Format::Csv}, {"dot", Format::Dot}};
  const std::map<std::string, Format> record_formats{{"jsonl", Format::Jsonl}, {"csv", Format::Csv}};

  std::size_t depth = 0;
  Format format = Format::Jsonl;
  auto* enumerate = app.add_subcommand("enumerate", "All nodes down to a depth, level by level");
  enumerate->add_option("--depth", depth, "Deepest level to emit")->required();
  enumerate->add_option("--format", format, "jsonl, csv or dot")
      ->transform(CLI::CheckedTransformer(full_formats));

  TripleArgs triple_args;
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("S", triple_args.s, "Odd leg")->required();
    sub->add_option("C", triple_args.c, "Even leg")->required();
    sub->add_option("N", triple_args.n, "Hypotenuse")->required();
    sub->add_option("--format", format, "jsonl or csv")->transform(CLI::CheckedTransformer(record_formats));
  };
  auto* children_cmd = app.add_subcommand("children", "The three children, in order U-, L+, U+");
  add_triple(children_cmd);
  auto* parent_cmd = app.add_subcommand("parent", "The parent and the edge kind, or \"root\"");
  add_triple(parent_cmd);

  std::string form = "P";
  std::size_t steps = 1;
  auto* diff_path = app.add_subcommand("diff-path", "Follow the path on which one difference persists");
  add_triple(diff_path);
  diff_path->add_option("--form", form, "P = N-C, Q = N-S, R = C-S")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "R"}));
  diff_path->add_option("--steps", steps, "Number of triples to emit")->required()->check(CLI::PositiveNumber);

  std::string d_text;
  auto* diff_root = app.add_subcommand("diff-root", "Smallest triple with S - C = D");
  diff_root->add_option("D", d_text, "Odd difference")->required();
  diff_root->add_option("--format", format, "jsonl or csv")->transform(CLI::CheckedTransformer(record_formats));

  bool ascii = false;
  auto* solve_pell = app.add_subcommand("solve-pell", "An element a+b√2 of norm D");
  solve_pell->add_option("D", d_text, "Odd target norm")->required();
  solve_pell->add_flag("--ascii", ascii, "Print a+b*sqrt2");

  std::string max_n_text;
  bool serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "Compare tree search with a direct (m,n) scan");
  verify_cmd->add_option("--max-n", max_n_text, "Hypotenuse bound (>= 5)")->required();
  verify_cmd->add_flag("--serial", serial, "Use the serial reference kernels");

  std::vector<const char*> argv{"pytree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }

  try {
    if (enumerate->parsed()) {
      if (format == Format::Dot) {
        write_dot(out, depth);
        return kOk;
      }
      RecordWriter w(out, format);
      for (std::size_t k = 0; k <= depth; ++k) {
        LevelIterator it(k);
        while (auto t = it.next()) w.write(make_record(*t, it.path()));
      }
      return kOk;
    }

    if (children_cmd->parsed() || parent_cmd->parsed() || diff_path->parsed()) {
      std::optional<PrimTriple> t;
      if (int rc = read_triple(triple_args, t, err); rc != kOk) return rc;
      RecordWriter w(out, format);
      const TreePath path = locate(*t);

      if (children_cmd->parsed()) {
        for (ChildKind k : kChildOrder) {
          TreePath cp = path;
          cp.push_back(k);
          w.write(make_record(child(*t, k), cp));
        }
      } else if (parent_cmd->parsed()) {
        auto up = parent(*t);
        if (!up) {
          out << "root\n";
          return kOk;
        }
        const TreePath pp(path.begin(), path.end() - 1);
        OutputRecord r = make_record(up->first, pp);
        r.extra.emplace_back("via", json_string(kind_name(up->second)));
        w.write(r);
      } else {
        const DiffForm f = form_from(form);
        TreePath cur = path;
        for (const PrimTriple& p : difference_path(*t, f, steps)) {
          OutputRecord r = make_record(p, cur);
          r.extra.emplace_back("form", json_string(form));
          r.extra.emplace_back("diff", to_string(difference(p, f)));
          w.write(r);
          cur.push_back(invariant_child_kind(f));
        }
      }
      return kOk;
    }

    if (diff_root->parsed() || solve_pell->parsed()) {
      BigInt d;
      if (int rc = read_difference(d_text, d, err); rc != kOk) return rc;
      if (diff_root->parsed()) {
        if (auto why = difference_obstruction(d)) {
          err << "error: no primitive triple has S - C = " << d << ": " << *why << '\n';
          return kNotRepresentable;
        }
        const PrimTriple t = root_triple_for_difference(d);
        OutputRecord r = make_record(t);
        r.extra.emplace_back("diff", to_string(d));
        RecordWriter(out, format).write(r);
        return kOk;
      }
      if (!is_representable_R(d) && !is_representable_R(-d)) {
        err << "error: neither " << d << " nor " << -d
            << " is x^2 - 8y^2; that needs D = +-1 (mod 8) with every prime = 3, 5 (mod 8) "
               "to an even power\n";
        return kNotRepresentable;
      }
      out << format_quadint(solve_norm(d), ascii) << '\n';
      return kOk;
    }

    if (verify_cmd->parsed()) {
      BigInt bound;
      try {
        bound = parse_bigint(max_n_text);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
      }
      if (bound < 5) {
        err << "error: --max-n must be at least 5\n";
        return kBadFlags;
      }
      const kernels::VerifyReport rep = kernels::verify(bound, !serial);
      out << "tree:   " << rep.tree_count << " triples with N <= " << bound << '\n';
      out << "oracle: " << rep.oracle_count << " triples with N <= " << bound << '\n';
      if (rep.match()) {
        out << "match\n";
        return kOk;
      }
      out << "MISMATCH\n";
      for (const auto& t : rep.only_tree) out << "only in tree: " << t << '\n';
      for (const auto& t : rep.only_oracle) out << "only in oracle: " << t << '\n';
      for (const auto& t : rep.duplicates) out << "duplicate in tree: " << t << '\n';
      return kVerifyMismatch;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kNotRepresentable;
  }
  return kBadFlags;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pytree::cli
