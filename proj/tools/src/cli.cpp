#include "tess/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "tess/bicomplex.hpp"
#include "tess/biquaternion.hpp"
#include "tess/error.hpp"
#include "tess/linear_text.hpp"
#include "tess/multicomplex.hpp"
#include "tess/polysolve.hpp"
#include "tess/quadruple.hpp"
#include "tess/surd.hpp"

namespace tess::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "1";

struct Context {
  std::string format = "text";
  bool json_flag = false;
  std::ostream* out = nullptr;
  CLI::App* leaf = nullptr;  // selected subcommand, for help excerpts

  bool json_output() const { return json_flag || format == "json"; }
};

// ---- JSON encoding -------------------------------------------------------

json encode(const Rational& v) { return tess::to_string(v); }
json encode(double v) { return v; }

template <Scalar T>
json encode(const Complex<T>& z) {
  return json{{"re", encode(z.re)}, {"im", encode(z.im)}};
}

json encode(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

template <Scalar T>
json encode(const Bicomplex<T>& a) {
  return json{{"w", encode(a.w)}, {"x", encode(a.x)}, {"y", encode(a.y)}, {"z", encode(a.z)}};
}

template <Scalar T>
json encode(const Multicomplex<T>& a) {
  json list = json::array();
  for (const auto& v : mc_to_graded(a)) list.push_back(encode(v));
  return list;
}

template <Scalar T>
json encode(const Biquaternion<T>& q) {
  return json{{"1", encode(q.c[0])}, {"i", encode(q.c[1])}, {"j", encode(q.c[2])},
              {"k", encode(q.c[3])}};
}

json document() { return json{{"schema", kSchema}}; }

void emit(const Context& ctx, const json& doc, const std::string& text) {
  if (ctx.json_output()) {
    *ctx.out << doc.dump(2) << '\n';
  } else {
    *ctx.out << text;
    if (!text.empty() && text.back() != '\n') *ctx.out << '\n';
  }
}

// ---- element parsing -----------------------------------------------------

Complex<Rational> parse_complex_value(const std::string& text) {
  static const CombinationSyntax syntax{{}, true, {}};
  return parse_combination(text, syntax)[0];
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

Multicomplex<Rational> parse_multicomplex(int order, const std::string& text) {
  if (order < 1 || order > kMaxMulticomplexOrder) {
    throw Error(ErrorKind::InvalidArgument,
                "order must be between 1 and " + std::to_string(kMaxMulticomplexOrder));
  }
  std::vector<std::string> parts = split_list(text, ',');
  const std::size_t dim = std::size_t{1} << order;
  if (parts.size() != dim) {
    throw Error(ErrorKind::InvalidArgument, "order " + std::to_string(order) + " needs " +
                                                std::to_string(dim) + " coefficients, got " +
                                                std::to_string(parts.size()));
  }
  std::vector<Rational> values;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    std::size_t lead = p.find_first_not_of(" \t");
    std::size_t tail = p.find_last_not_of(" \t\r");
    std::string trimmed = lead == std::string::npos ? "" : p.substr(lead, tail - lead + 1);
    try {
      values.push_back(parse_rational(trimmed));
    } catch (const SyntaxError& e) {
      throw SyntaxError(offset + (lead == std::string::npos ? 0 : lead) + e.position(),
                        e.expected());
    }
    offset += p.size() + 1;
  }
  return mc_from_graded(order, values);
}

QuadElement<Rational> parse_quad_element(QuadSystem system, const std::string& text) {
  auto names = unit_names(system);
  CombinationSyntax syntax{{names[1], names[2], names[3]}, false, {}};
  auto c = parse_combination(text, syntax);
  auto table = std::make_shared<const CayleyTable>(system_table(system));
  return quad_element(table, c[0].re, c[1].re, c[2].re, c[3].re);
}

QuadSystem require_system(const std::string& name) {
  auto s = parse_quad_system(name);
  if (!s) {
    throw Error(ErrorKind::InvalidArgument,
                "unknown system '" + name + "' (quaternion, tessarine, coquaternion, cotessarine)");
  }
  return *s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::string format_rational_list(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (n) s += ",";
    s += tess::to_string(values[n]);
  }
  return s;
}

// ---- bc ------------------------------------------------------------------

void add_bc(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* bc = app.add_subcommand("bc", "Bicomplex numbers w + x*i + y*h + z*k (k = ih)");
  bc->require_subcommand(1);
  bc->footer(
      "Elements are written as linear combinations of 1, i, h, k with rational\n"
      "coefficients, e.g. \"1/2 - 1/2*k\" or \"3 + 2i - h\". Quote arguments that\n"
      "start with '-' after a '--' separator.");

  auto binary = [&](const char* name, const char* help, auto op) {
    auto* sub = bc->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("a", *a, "first element")->required();
    sub->add_option("b", *b, "second element")->required();
    sub->callback([&ctx, &action, sub, a, b, op] {
      ctx.leaf = sub;
      action = [&ctx, a, b, op] {
        Bicomplex<Rational> r = op(parse_bicomplex(*a), parse_bicomplex(*b));
        json doc = document();
        doc["result"] = encode(r);
        emit(ctx, doc, format_bicomplex(r));
      };
    });
  };
  binary("add", "Sum of two elements", [](const auto& x, const auto& y) { return bc_add(x, y); });
  binary("sub", "Difference of two elements", [](const auto& x, const auto& y) { return bc_sub(x, y); });
  binary("mul", "Product of two elements", [](const auto& x, const auto& y) { return bc_mul(x, y); });

  auto unary = [&](const char* name, const char* help, auto body) {
    auto* sub = bc->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    sub->add_option("a", *a, "element")->required();
    sub->callback([&ctx, &action, sub, a, body] {
      ctx.leaf = sub;
      action = [&ctx, a, body] { body(ctx, parse_bicomplex(*a)); };
    });
  };
  unary("decompose", "Idempotent split into (Z, Z') with a = Z g + Z' g'",
        [](const Context& c, const Bicomplex<Rational>& a) {
          SplitPair<Rational> p = bc_decompose(a);
          json doc = document();
          doc["z1"] = encode(p.z1);
          doc["z2"] = encode(p.z2);
          emit(c, doc, "Z  = " + format_complex(p.z1) + "\nZ' = " + format_complex(p.z2));
        });
  unary("ideal", "Classify as None, FirstSet, SecondSet or Zero",
        [](const Context& c, const Bicomplex<Rational>& a) {
          IdealTag tag = bc_ideal(a);
          json doc = document();
          doc["ideal"] = std::string(to_string(tag));
          emit(c, doc, std::string(to_string(tag)));
        });
  unary("norm", "Norm |Z| |Z'| and its exact square",
        [](const Context& c, const Bicomplex<Rational>& a) {
          json doc = document();
          double n = bc_norm(a);
          Rational sq = bc_norm_sq(a);
          doc["norm"] = n;
          doc["norm_sq"] = encode(sq);
          emit(c, doc, "norm    = " + format_double(n) + "\nnorm^2  = " + tess::to_string(sq));
        });
  unary("inverse", "Multiplicative inverse (fails on zero divisors)",
        [](const Context& c, const Bicomplex<Rational>& a) {
          Bicomplex<Rational> r = bc_inverse(a);
          json doc = document();
          doc["result"] = encode(r);
          emit(c, doc, format_bicomplex(r));
        });
  unary("conj", "The three conjugates (i -> -i, h -> -h, both)",
        [](const Context& c, const Bicomplex<Rational>& a) {
          Conjugates<Rational> cj = bc_conjugates(a);
          json doc = document();
          doc["conj_i"] = encode(cj.conj_i);
          doc["conj_h"] = encode(cj.conj_h);
          doc["conj_ih"] = encode(cj.conj_ih);
          emit(c, doc,
               "conj_i  = " + format_bicomplex(cj.conj_i) + "\nconj_h  = " +
                   format_bicomplex(cj.conj_h) + "\nconj_ih = " + format_bicomplex(cj.conj_ih));
        });

  auto* rec = bc->add_subcommand("recompose", "Element Z g + Z' g' from two complex values");
  auto z1 = std::make_shared<std::string>();
  auto z2 = std::make_shared<std::string>();
  rec->add_option("Z", *z1, "first component, e.g. 3 or (1,-2)")->required();
  rec->add_option("Zprime", *z2, "second component")->required();
  rec->callback([&ctx, &action, rec, z1, z2] {
    ctx.leaf = rec;
    action = [&ctx, z1, z2] {
      Bicomplex<Rational> r =
          bc_recompose(SplitPair<Rational>{parse_complex_value(*z1), parse_complex_value(*z2)});
      json doc = document();
      doc["result"] = encode(r);
      emit(ctx, doc, format_bicomplex(r));
    };
  });
}

// ---- mc ------------------------------------------------------------------

std::string mc_text(const Multicomplex<Rational>& a) {
  return format_rational_list(mc_to_graded(a));
}

void add_mc(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* mc = app.add_subcommand("mc", "Multicomplex numbers of order n (n = 2: bicomplex, n = 3: octrines)");
  mc->require_subcommand(1);
  auto order = std::make_shared<int>(2);
  mc->add_option("--order,-n", *order, "number of imaginary units")->check(CLI::Range(1, kMaxMulticomplexOrder));
  mc->footer(
      "Coefficients are a comma list of 2^n rationals in graded order: the\n"
      "scalar, then single units, then pairs, and so on, each group in\n"
      "lexicographic order. For n = 3:\n"
      "  1, i1, i2, i3, i1i2, i1i3, i2i3, i1i2i3\n"
      "Split components are complex values; unsplit takes them as a\n"
      "semicolon list such as \"1;(0,1);0;2\".");

  auto binary = [&](const char* name, const char* help, auto op) {
    auto* sub = mc->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("a", *a, "first coefficient list")->required();
    sub->add_option("b", *b, "second coefficient list")->required();
    sub->callback([&ctx, &action, sub, a, b, order, op] {
      ctx.leaf = sub;
      action = [&ctx, a, b, order, op] {
        auto r = op(parse_multicomplex(*order, *a), parse_multicomplex(*order, *b));
        json doc = document();
        doc["order"] = *order;
        doc["coeffs"] = encode(r);
        emit(ctx, doc, mc_text(r));
      };
    });
  };
  binary("add", "Sum", [](const auto& x, const auto& y) { return mc_add(x, y); });
  binary("mul", "Product", [](const auto& x, const auto& y) { return mc_mul(x, y); });

  auto* split = mc->add_subcommand("split", "Spectrum: the 2^(n-1) complex components");
  auto sa = std::make_shared<std::string>();
  split->add_option("a", *sa, "coefficient list")->required();
  split->callback([&ctx, &action, split, sa, order] {
    ctx.leaf = split;
    action = [&ctx, sa, order] {
      SpectrumVector<Rational> s = mc_split(parse_multicomplex(*order, *sa));
      json doc = document();
      doc["order"] = *order;
      json list = json::array();
      std::string text;
      for (const auto& z : s) {
        list.push_back(encode(z));
        text += format_complex(z) + "\n";
      }
      doc["spectrum"] = list;
      emit(ctx, doc, text);
    };
  });

  auto* unsplit = mc->add_subcommand("unsplit", "Element with the given spectrum");
  auto ua = std::make_shared<std::string>();
  unsplit->add_option("spectrum", *ua, "semicolon list of 2^(n-1) complex values")->required();
  unsplit->callback([&ctx, &action, unsplit, ua, order] {
    ctx.leaf = unsplit;
    action = [&ctx, ua, order] {
      SpectrumVector<Rational> s;
      for (const auto& part : split_list(*ua, ';')) s.push_back(parse_complex_value(part));
      if (s.size() != (std::size_t{1} << (*order - 1))) {
        throw Error(ErrorKind::InvalidArgument, "order " + std::to_string(*order) + " needs " +
                                                    std::to_string(std::size_t{1} << (*order - 1)) +
                                                    " spectrum values");
      }
      Multicomplex<Rational> r = mc_unsplit(*order, s);
      json doc = document();
      doc["order"] = *order;
      doc["coeffs"] = encode(r);
      emit(ctx, doc, mc_text(r));
    };
  });

  auto* zd = mc->add_subcommand("zero-divisor", "Whether a nonzero element is a zero divisor");
  auto za = std::make_shared<std::string>();
  zd->add_option("a", *za, "coefficient list")->required();
  zd->callback([&ctx, &action, zd, za, order] {
    ctx.leaf = zd;
    action = [&ctx, za, order] {
      bool r = mc_is_zero_divisor(parse_multicomplex(*order, *za));
      json doc = document();
      doc["zero_divisor"] = r;
      emit(ctx, doc, r ? "true" : "false");
    };
  });
}

// ---- algebra -------------------------------------------------------------

json encode_table(const CayleyTable& t) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(to_string(t(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string table_text(const CayleyTable& t, const std::array<std::string, 4>& names) {
  auto cell = [&](SignedUnit u) {
    std::string s = u.sign < 0 ? "-" : "";
    return s + names[static_cast<std::size_t>(u.index)];
  };
  std::ostringstream os;
  os << std::setw(4) << "*";
  for (int c = 0; c < 4; ++c) os << std::setw(4) << names[static_cast<std::size_t>(c)];
  os << '\n';
  for (int r = 0; r < 4; ++r) {
    os << std::setw(4) << names[static_cast<std::size_t>(r)];
    for (int c = 0; c < 4; ++c) os << std::setw(4) << cell(t(r, c));
    os << '\n';
  }
  return os.str();
}

void add_algebra(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* alg = app.add_subcommand("algebra", "Quadruple algebras on 1, a, b, c = ab");
  alg->require_subcommand(1);
  alg->footer(
      "Systems: quaternion (a^2 = b^2 = -1), tessarine (a^2 = -1, b^2 = +1,\n"
      "commutative), coquaternion (a^2 = -1, b^2 = +1, anticommuting),\n"
      "cotessarine (a^2 = b^2 = +1). Tables in JSON use the generic names\n"
      "1, a, b, c; text output uses each system's own unit names.");

  auto* table = alg->add_subcommand("table", "Multiplication table of a named system");
  auto tname = std::make_shared<std::string>();
  table->add_option("system", *tname, "quaternion|tessarine|coquaternion|cotessarine")->required();
  table->callback([&ctx, &action, table, tname] {
    ctx.leaf = table;
    action = [&ctx, tname] {
      QuadSystem s = require_system(*tname);
      CayleyTable t = system_table(s);
      auto names = unit_names(s);
      json doc = document();
      doc["system"] = std::string(to_string(s));
      doc["units"] = json(std::vector<std::string>(names.begin(), names.end()));
      doc["normal"] = is_normal(t);
      doc["table"] = encode_table(t);
      emit(ctx, doc,
           table_text(t, names) + (is_normal(t) ? "normal (commutative)\n" : "abnormal (noncommutative)\n"));
    };
  });

  auto* derive = alg->add_subcommand("derive", "All associative tables with ab = c for given squares");
  auto sq_a = std::make_shared<int>(-1);
  auto sq_b = std::make_shared<int>(-1);
  derive->add_option("--sq-a", *sq_a, "a^2, +1 or -1")->required()->allow_extra_args(false);
  derive->add_option("--sq-b", *sq_b, "b^2, +1 or -1")->required()->allow_extra_args(false);
  derive->callback([&ctx, &action, derive, sq_a, sq_b] {
    ctx.leaf = derive;
    action = [&ctx, sq_a, sq_b] {
      auto tables = derive_table(QuadSignature{*sq_a, *sq_b});
      json doc = document();
      doc["signature"] = json{{"sq_a", *sq_a}, {"sq_b", *sq_b}};
      json list = json::array();
      std::string text;
      const std::array<std::string, 4> generic{"1", "a", "b", "c"};
      for (const auto& t : tables) {
        list.push_back(json{{"normal", is_normal(t)}, {"sq_c", t.sq_c()}, {"table", encode_table(t)}});
        text += table_text(t, generic);
        text += is_normal(t) ? "normal\n\n" : "abnormal\n\n";
      }
      doc["tables"] = list;
      emit(ctx, doc, text);
    };
  });

  auto* norm = alg->add_subcommand("norm", "Determinant of left multiplication by an element");
  auto nsys = std::make_shared<std::string>();
  auto nelem = std::make_shared<std::string>();
  norm->add_option("system", *nsys, "system name")->required();
  norm->add_option("element", *nelem, "element in the system's unit names, e.g. \"1 + 2i - k\"")
      ->required();
  norm->callback([&ctx, &action, norm, nsys, nelem] {
    ctx.leaf = norm;
    action = [&ctx, nsys, nelem] {
      QuadSystem s = require_system(*nsys);
      Rational n = norm_form(parse_quad_element(s, *nelem));
      json doc = document();
      doc["norm_form"] = encode(n);
      emit(ctx, doc, tess::to_string(n));
    };
  });

  auto* mul = alg->add_subcommand("mul", "Product of two elements of a named system");
  auto msys = std::make_shared<std::string>();
  auto ma = std::make_shared<std::string>();
  auto mb = std::make_shared<std::string>();
  mul->add_option("system", *msys, "system name")->required();
  mul->add_option("a", *ma, "first element")->required();
  mul->add_option("b", *mb, "second element")->required();
  mul->callback([&ctx, &action, mul, msys, ma, mb] {
    ctx.leaf = mul;
    action = [&ctx, msys, ma, mb] {
      QuadSystem s = require_system(*msys);
      auto r = quad_mul(parse_quad_element(s, *ma), parse_quad_element(s, *mb));
      auto names = unit_names(s);
      json doc = document();
      json coeffs = json::array();
      std::vector<std::string> strs;
      for (const auto& v : r.c) {
        coeffs.push_back(encode(v));
        strs.push_back(tess::to_string(v));
      }
      doc["coeffs"] = coeffs;
      emit(ctx, doc, format_combination(strs, {"", names[1], names[2], names[3]}));
    };
  });
}

// ---- poly ----------------------------------------------------------------

template <class E>
json encode_root_value(const SolvedRoot<E>& r) {
  if (r.exact) return encode(r.value);
  if constexpr (std::is_same_v<E, Bicomplex<Rational>>) {
    return encode(bc_to_double(r.value));
  } else {
    json list = json::array();
    for (const auto& v : mc_to_graded(r.value)) list.push_back(to_double(v));
    return list;
  }
}

template <class E>
std::string root_text(const SolvedRoot<E>& r) {
  if constexpr (std::is_same_v<E, Bicomplex<Rational>>) {
    return r.exact ? format_bicomplex(r.value) : format_bicomplex(bc_to_double(r.value));
  } else {
    if (r.exact) return mc_text(r.value);
    std::string s;
    auto values = mc_to_graded(r.value);
    for (std::size_t n = 0; n < values.size(); ++n) {
      if (n) s += ",";
      s += format_double(to_double(values[n]));
    }
    return s;
  }
}

template <class E>
void emit_root_set(const Context& ctx, const RootSet<E>& set) {
  json doc = document();
  doc["kind"] = set.kind == RootKind::Finite ? "Finite" : "InfiniteFamily";
  doc["counts"] = set.degrees;
  std::ostringstream text;
  text << "kind: " << (set.kind == RootKind::Finite ? "Finite" : "InfiniteFamily") << '\n';
  text << "counts:";
  for (int d : set.degrees) text << ' ' << d;
  text << '\n';
  if (set.kind == RootKind::Finite) {
    json roots = json::array();
    json residuals = json::array();
    for (const auto& r : set.roots) {
      json split = json::array();
      for (auto z : r.split) split.push_back(encode(z));
      roots.push_back(json{{"value", encode_root_value(r)},
                           {"split", split},
                           {"multiplicity", r.multiplicity},
                           {"exact", r.exact}});
      residuals.push_back(r.residual);
      text << root_text(r) << "    multiplicity " << r.multiplicity << ", residual "
           << format_double(r.residual) << (r.exact ? ", exact" : "") << '\n';
    }
    doc["total"] = set.total_multiplicity();
    doc["roots"] = roots;
    doc["residuals"] = residuals;
    text << "total: " << set.total_multiplicity() << '\n';
  } else {
    doc["free_components"] = set.free_components;
    json comps = json::array();
    for (std::size_t c = 0; c < set.component_roots.size(); ++c) {
      json list = json::array();
      bool free = std::find(set.free_components.begin(), set.free_components.end(), c) !=
                  set.free_components.end();
      text << "component " << c << ": ";
      if (free) text << "free";
      for (const auto& cr : set.component_roots[c]) {
        list.push_back(json{{"value", cr.exact ? encode(cr.value) : encode(to_std(cr.value))},
                            {"multiplicity", cr.multiplicity},
                            {"exact", cr.exact}});
        text << (cr.exact ? format_complex(cr.value) : format_complex(Complex<double>(
                                                          to_double(cr.value.re), to_double(cr.value.im))))
             << ' ';
      }
      text << '\n';
      comps.push_back(list);
    }
    doc["component_roots"] = comps;
  }
  emit(ctx, doc, text.str());
}

void add_poly(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* poly = app.add_subcommand("poly", "Polynomial equations with bicomplex or multicomplex coefficients");
  poly->require_subcommand(1);
  auto* solve_cmd = poly->add_subcommand("solve", "All roots of sum_l a_l z^l = 0");
  auto algebra = std::make_shared<std::string>("bicomplex");
  auto file = std::make_shared<std::string>();
  solve_cmd->add_option("--algebra", *algebra, "bicomplex or mc:<n>");
  solve_cmd->add_option("--coeffs", *file, "coefficient file")->required();
  solve_cmd->footer(
      "The coefficient file holds one coefficient per line, constant term\n"
      "first. Bicomplex coefficients use the bc element syntax; mc:<n>\n"
      "coefficients are comma lists in graded order (see `mc --help`).\n"
      "Blank lines and text after '#' are ignored.");
  solve_cmd->callback([&ctx, &action, solve_cmd, algebra, file] {
    ctx.leaf = solve_cmd;
    action = [&ctx, algebra, file] {
      std::vector<std::string> lines = nonblank_lines(read_file(*file));
      if (*algebra == "bicomplex") {
        BicomplexPolynomial<Rational> p;
        for (const auto& l : lines) p.push_back(parse_bicomplex(l));
        emit_root_set(ctx, solve(p));
        return;
      }
      if (algebra->rfind("mc:", 0) == 0) {
        int order = 0;
        try {
          order = std::stoi(algebra->substr(3));
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidArgument, "bad algebra '" + *algebra + "'");
        }
        MulticomplexPolynomial<Rational> p;
        for (const auto& l : lines) p.push_back(parse_multicomplex(order, l));
        emit_root_set(ctx, mc_solve(p));
        return;
      }
      throw Error(ErrorKind::InvalidArgument, "algebra must be bicomplex or mc:<n>");
    };
  });
}

// ---- biq -----------------------------------------------------------------

void add_biq(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* biq = app.add_subcommand("biq", "Biquaternions q' + w q'' (w central, w^2 = -1)");
  biq->require_subcommand(1);
  biq->footer(
      "Elements combine 1, i, j, k with rational or complex coefficients\n"
      "written (re,im); w stands for the scalar imaginary. Examples:\n"
      "  \"k + w\"   \"(1,2) + (0,-1)*j\"   \"1/2*i - 1/2*k\"");

  auto* mul = biq->add_subcommand("mul", "Product a*b");
  auto ma = std::make_shared<std::string>();
  auto mb = std::make_shared<std::string>();
  mul->add_option("a", *ma, "first element")->required();
  mul->add_option("b", *mb, "second element")->required();
  mul->callback([&ctx, &action, mul, ma, mb] {
    ctx.leaf = mul;
    action = [&ctx, ma, mb] {
      auto r = bq_mul(parse_biquaternion(*ma), parse_biquaternion(*mb));
      json doc = document();
      doc["result"] = encode(r);
      emit(ctx, doc, format_biquaternion(r));
    };
  });

  auto* nul = biq->add_subcommand("nullifier", "Whether a nonzero element is a zero divisor");
  auto na = std::make_shared<std::string>();
  nul->add_option("a", *na, "element")->required();
  nul->callback([&ctx, &action, nul, na] {
    ctx.leaf = nul;
    action = [&ctx, na] {
      auto a = parse_biquaternion(*na);
      bool r = bq_is_nullifier(a);
      json doc = document();
      doc["nullifier"] = r;
      doc["determinant"] = encode(bq_determinant(a));
      emit(ctx, doc, r ? "true" : "false");
    };
  });

  auto* comp = biq->add_subcommand("complanar", "Bicomplex image of an element c0 + c1*i");
  auto ca = std::make_shared<std::string>();
  comp->add_option("a", *ca, "element")->required();
  comp->callback([&ctx, &action, comp, ca] {
    ctx.leaf = comp;
    action = [&ctx, ca] {
      auto r = complanar_to_bicomplex(parse_biquaternion(*ca));
      json doc = document();
      doc["result"] = encode(r);
      emit(ctx, doc, format_bicomplex(r));
    };
  });

  auto* quad = biq->add_subcommand("solve-quadratic", "Isolated solutions of q^2 = q*b + c");
  auto qb = std::make_shared<std::string>();
  auto qc = std::make_shared<std::string>();
  quad->add_option("--b", *qb, "coefficient b")->required();
  quad->add_option("--c", *qc, "coefficient c")->required();
  quad->callback([&ctx, &action, quad, qb, qc] {
    ctx.leaf = quad;
    action = [&ctx, qb, qc] {
      auto b = bq_to_double(parse_biquaternion(*qb));
      auto c = bq_to_double(parse_biquaternion(*qc));
      QuadraticSolveResult res = bq_solve_quadratic(b, c);
      json doc = document();
      json list = json::array();
      std::ostringstream text;
      int quaternions = 0;
      for (const auto& s : res.solutions) {
        quaternions += s.real_quaternion ? 1 : 0;
        const char* tag = s.real_quaternion ? "quaternion" : "biquaternion";
        list.push_back(json{{"q", encode(s.q)}, {"residual", s.residual}, {"tag", tag}});
        text << format_biquaternion(s.q) << "    " << tag << ", residual "
             << format_double(s.residual) << '\n';
      }
      doc["count"] = res.solutions.size();
      doc["quaternions"] = quaternions;
      doc["solutions"] = list;
      text << res.solutions.size() << " solutions, " << quaternions << " real quaternions\n";
      emit(ctx, doc, text.str());
    };
  });
}

// ---- surd ----------------------------------------------------------------

std::string signs_text(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v < 0 ? '-' : '+';
  return s;
}

std::string root_label(const StockRoot& r) {
  if (r.exact) return tess::to_string(*r.exact);
  if (r.real) return format_double(r.value.real());
  return format_complex(Complex<double>(r.value.real(), r.value.imag()));
}

void add_surd(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* surd = app.add_subcommand("surd", "Radical equations, their congeners and stock equation");
  surd->require_subcommand(1);
  auto* analyze = surd->add_subcommand("analyze", "Congener report for an equation in x");
  auto eq_text = std::make_shared<std::string>();
  analyze->add_option("equation", *eq_text, "e.g. \"2*x + sqrt(x^2 - 7) = 5\"")->required();
  analyze->footer(
      "Grammar: expressions in x with rational literals, +, -, *, /, ^ with\n"
      "integer exponents and sqrt(...) of polynomials; at most one radical\n"
      "per term and no radical inside a radical.");
  analyze->callback([&ctx, &action, analyze, eq_text] {
    ctx.leaf = analyze;
    action = [&ctx, eq_text] {
      SurdEquation eq = parse_surd(*eq_text);
      CongenerReport rep = classify_roots(eq);
      json doc = document();
      doc["equation"] = to_string(eq);
      json coeffs = json::array();
      for (const auto& c : rep.stock.coeffs()) coeffs.push_back(encode(c));
      doc["stock"] = json{{"coeffs", coeffs}, {"degree", rep.degree}, {"text", rep.stock.to_string()}};
      doc["order"] = rep.order;

      std::ostringstream text;
      text << "equation: " << to_string(eq) << '\n';
      text << "stock:    " << rep.stock.to_string() << " = 0  (degree " << rep.degree << ")\n";
      text << "order:    " << rep.order << '\n';
      text << "roots:\n";
      json roots = json::array();
      for (const auto& r : rep.roots) {
        json item{{"value", root_label(r)},
                  {"re", r.value.real()},
                  {"im", r.value.imag()},
                  {"exact", r.exact.has_value()},
                  {"multiplicity", r.multiplicity},
                  {"real", r.real},
                  {"status", r.status == RootStatus::Assigned ? "Assigned" : "Ambiguous"},
                  {"congeners", r.congeners}};
        roots.push_back(item);
        text << "  " << root_label(r);
        if (r.multiplicity > 1) text << " (multiplicity " << r.multiplicity << ")";
        if (r.status == RootStatus::Ambiguous) {
          text << "  ambiguous\n";
        } else {
          text << "  -> congener";
          for (auto c : r.congeners) text << ' ' << c;
          text << '\n';
        }
      }
      doc["roots"] = roots;

      text << "congeners:\n";
      json congs = json::array();
      for (std::size_t f = 0; f < rep.congeners.size(); ++f) {
        const auto& cs = rep.congeners[f];
        json root_values = json::array();
        std::string listed;
        for (auto r : cs.roots) {
          root_values.push_back(root_label(rep.roots[r]));
          listed += " " + root_label(rep.roots[r]);
        }
        congs.push_back(json{{"signs", cs.signs},
                             {"equation", to_string(congener(eq, f))},
                             {"status", cs.possible ? "Possible" : "Impossible"},
                             {"roots", root_values}});
        text << "  [" << f << "] " << signs_text(cs.signs) << "  " << to_string(congener(eq, f))
             << "  " << (cs.possible ? "possible:" + listed : std::string("impossible")) << '\n';
      }
      doc["congeners"] = congs;
      emit(ctx, doc, text.str());
    };
  });
}

// ---- corpus --------------------------------------------------------------

void add_corpus(CLI::App& app, Context& ctx, std::function<void()>& action, int& corpus_status,
                std::ostream& err) {
  auto* corpus = app.add_subcommand("corpus", "Run a directory of golden case files");
  auto dir = std::make_shared<std::string>();
  corpus->add_option("dir", *dir, "directory of *.json case files")->required();
  corpus->footer(
      "Each case file is a JSON object {\"args\": [...], \"exit\": 0,\n"
      "\"expect\": <JSON output>} or with \"expect_text\" for text output.\n"
      "An optional \"tolerance\" compares numbers with that relative error;\n"
      "otherwise comparison is exact. \"{dir}\" in an argument is replaced\n"
      "by the directory holding the case file.");
  corpus->callback([&ctx, &action, &corpus_status, &err, corpus, dir] {
    ctx.leaf = corpus;
    action = [&ctx, &corpus_status, &err, dir] { corpus_status = run_corpus(*dir, *ctx.out, err); };
  });
}

void print_help_excerpt(std::ostream& err, const CLI::App* leaf) {
  if (leaf == nullptr) return;
  err << leaf->help("", CLI::AppFormatMode::Normal);
}

// ---- corpus comparison ---------------------------------------------------

bool numbers_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void diff_json(const json& want, const json& got, const std::string& path,
               std::optional<double> tol, std::vector<std::string>& diffs) {
  if (tol && want.is_number() && got.is_number()) {
    if (!numbers_close(want.get<double>(), got.get<double>(), *tol)) {
      diffs.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
    }
    return;
  }
  if (want.type() != got.type() &&
      !(want.is_number() && got.is_number() && want == got)) {
    diffs.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
    return;
  }
  if (want.is_object()) {
    for (auto it = want.begin(); it != want.end(); ++it) {
      if (!got.contains(it.key())) {
        diffs.push_back(path + "/" + it.key() + ": missing");
      } else {
        diff_json(*it, got.at(it.key()), path + "/" + it.key(), tol, diffs);
      }
    }
    for (auto it = got.begin(); it != got.end(); ++it) {
      if (!want.contains(it.key())) diffs.push_back(path + "/" + it.key() + ": unexpected");
    }
    return;
  }
  if (want.is_array()) {
    if (want.size() != got.size()) {
      diffs.push_back(path + ": expected " + std::to_string(want.size()) + " items, got " +
                      std::to_string(got.size()));
      return;
    }
    for (std::size_t n = 0; n < want.size(); ++n) {
      diff_json(want[n], got[n], path + "/" + std::to_string(n), tol, diffs);
    }
    return;
  }
  if (want != got) diffs.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
}

// Returns the list of problems; empty means the case passed.
std::vector<std::string> run_case(const std::filesystem::path& file) {
  std::vector<std::string> problems;
  json doc;
  try {
    doc = json::parse(read_file(file.string()));
  } catch (const std::exception& e) {
    return {std::string("invalid case file: ") + e.what()};
  }
  if (!doc.is_object() || !doc.contains("args") || !doc["args"].is_array()) {
    return {"invalid case file: needs an \"args\" array"};
  }
  std::vector<std::string> args;
  for (const auto& a : doc["args"]) {
    if (!a.is_string()) return {"invalid case file: args must be strings"};
    std::string arg = a.get<std::string>();
    for (auto at = arg.find("{dir}"); at != std::string::npos; at = arg.find("{dir}", at)) {
      std::string dir = file.parent_path().string();
      arg.replace(at, 5, dir);
      at += dir.size();
    }
    args.push_back(std::move(arg));
  }
  if (!args.empty() && args.front() == "corpus") return {"invalid case file: nested corpus"};
  int want_exit = doc.value("exit", 0);
  std::optional<double> tol;
  if (doc.contains("tolerance")) tol = doc["tolerance"].get<double>();

  std::ostringstream out, err;
  int got_exit = run(args, out, err);
  if (got_exit != want_exit) {
    problems.push_back("exit: expected " + std::to_string(want_exit) + ", got " +
                       std::to_string(got_exit) + (err.str().empty() ? "" : " (" + err.str() + ")"));
  }
  if (doc.contains("expect")) {
    json got;
    try {
      got = json::parse(out.str());
    } catch (const std::exception&) {
      problems.push_back("output is not JSON: " + out.str());
      return problems;
    }
    diff_json(doc["expect"], got, "", tol, problems);
  }
  if (doc.contains("expect_text")) {
    std::string want = doc["expect_text"].get<std::string>();
    if (want != out.str()) problems.push_back("text: expected\n" + want + "got\n" + out.str());
  }
  return problems;
}

}  // namespace

int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "error: not a directory: " << dir << '\n';
    return kUsageError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "warning: 0 cases in " << dir << '\n';
    out << "0 cases\n";
    return kOk;
  }
  std::size_t failed = 0;
  for (const auto& f : files) {
    std::vector<std::string> problems = run_case(f);
    out << (problems.empty() ? "PASS " : "FAIL ") << f.filename().string() << '\n';
    for (const auto& p : problems) out << "    " << p << '\n';
    failed += problems.empty() ? 0 : 1;
  }
  out << files.size() << " cases, " << failed << " failed\n";
  return failed == 0 ? kOk : kComputationError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  std::function<void()> action;
  int corpus_status = kOk;

  CLI::App app{"Hypercomplex algebra toolkit: bicomplex and multicomplex numbers, quadruple\n"
               "algebras, biquaternions, polynomial solving and radical equations.",
               "tess"};
  app.fallthrough();
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", ctx.json_flag, "same as --format json");

  add_bc(app, ctx, action);
  add_mc(app, ctx, action);
  add_algebra(app, ctx, action);
  add_poly(app, ctx, action);
  add_biq(app, ctx, action);
  add_surd(app, ctx, action);
  add_corpus(app, ctx, action, corpus_status, err);

  for (std::size_t n = 0; n < args.size(); ++n) {
    const std::string& a = args[n];
    if (a == "--format") {
      ++n;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown subcommand '" << a << "'\n" << app.help();
      return kUsageError;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (!action) {
    err << app.help();
    return kUsageError;
  }
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (is_usage_error(e.kind())) {
      print_help_excerpt(err, ctx.leaf);
      return kUsageError;
    }
    return kComputationError;
  }
  return corpus_status;
}

}  // namespace tess::cli
