#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tokspace/class_ops.hpp"
#include "tokspace/codec.hpp"
#include "tokspace/oracle.hpp"
#include "tokspace/reify.hpp"
#include "tokspace/rep.hpp"
#include "tokspace/structure.hpp"
#include "tokspace/term_io.hpp"

using namespace tokspace;

namespace {

// 0 holds/success, 1 fails, 2 parse/schema error, 3 undecided/unsupported
int error_exit(const Error& e) {
  const std::string& c = e.code();
  if (c == "SyntaxError" || c == "SchemaError" || c == "BadInput") return 2;
  if (c == "UndecidedContainment" || c == "SymbolicHeapUnsupported" ||
      c == "BaseTooLarge")
    return 3;
  return 1;
}

int verdict_exit(const Verdict& v) {
  if (v.holds_p()) {
    std::cout << "Holds\n";
    return 0;
  }
  if (v.fails_p()) {
    std::cout << "Fails";
    if (v.witness) std::cout << " witness " << v.witness->str();
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << "\n";
    return 1;
  }
  std::cout << "Undecided";
  if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << "\n";
  return 3;
}

std::vector<Symbol> parse_symbol_list(const std::string& csv) {
  std::vector<Symbol> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string part =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty()) out.push_back(parse_symbol(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ElemMap parse_map_arg(const std::vector<std::string>& pairs) {
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& p : pairs) {
    std::size_t eq = p.find('=');
    if (eq == std::string::npos) fail("BadInput", "map entries look like key=value");
    kv.emplace_back(parse_symbol(p.substr(0, eq)), parse_symbol(p.substr(eq + 1)));
  }
  return ElemMap::from(std::move(kv));
}

void emit_class(const TokenClass& t, const std::string& out) {
  std::string doc = print_class_doc(t);
  if (out.empty())
    std::cout << doc;
  else
    write_class(out, t);
}

void emit_map(const TokenMap& m) {
  std::cout << "map " << m.src.name << " -> " << m.dst.name << "\n";
  for (const auto& e : m.f0.entries)
    std::cout << "  " << e.first.str() << " -> " << e.second.str() << "\n";
}

int run_op(const std::string& name, const std::vector<std::string>& files,
           const std::vector<std::string>& map_arg, const std::string& syms,
           const std::string& out) {
  auto cls = [&](std::size_t i) {
    if (i >= files.size()) fail("BadInput", "operator " + name + " needs more inputs");
    return read_class(files[i]);
  };
  if (name == "merge") {
    emit_class(merging(cls(0), cls(1)), out);
  } else if (name == "meet") {
    emit_class(meeting(cls(0), cls(1)), out);
  } else if (name == "forget") {
    emit_class(forgetting(cls(0)), out);
  } else if (name == "delete") {
    emit_class(deleting(cls(0), cls(1)), out);
  } else if (name == "unknown") {
    emit_class(introduce_unknown(cls(0)), out);
  } else if (name == "power") {
    emit_class(powering(cls(0)), out);
  } else if (name == "obscure") {
    emit_class(obscuring(cls(0)), out);
  } else if (name == "matchup") {
    emit_class(matchup(cls(0), cls(1)), out);
  } else if (name == "blend") {
    emit_class(blending(cls(0), cls(1)), out);
  } else if (name == "union") {
    emit_class(union_y(cls(0), cls(1)), out);
  } else if (name == "refer") {
    emit_class(refering(cls(0), cls(1)), out);
  } else if (name == "lift") {
    emit_class(lifting(cls(0), parse_symbol_list(syms)), out);
  } else if (name == "abslift") {
    emit_class(absolute_lifting(cls(0), parse_symbol_list(syms)), out);
  } else if (name == "release") {
    emit_class(releasing(cls(0), parse_symbol_list(syms)), out);
  } else if (name == "rename") {
    emit_class(renaming(cls(0), parse_map_arg(map_arg)), out);
  } else if (name == "reverse") {
    TokenMap f = mk_map(cls(0), cls(1), parse_map_arg(map_arg));
    emit_map(reversing(f));
  } else if (name == "generalize") {
    TokenMap f = mk_map(cls(0), cls(1), parse_map_arg(map_arg));
    emit_class(generalizing(f, cls(2)), out);
  } else if (name == "product") {
    emit_class(product(cls(0), cls(1)).cls, out);
  } else if (name == "coproduct") {
    emit_class(coproduct(cls(0), cls(1)).cls, out);
  } else if (name == "exponent") {
    emit_class(exponent(cls(0), cls(1)).cls, out);
  } else {
    fail("BadInput", "unknown operator " + name);
  }
  return 0;
}

int run_tree(const std::string& verb, const std::vector<std::string>& args) {
  auto term = [&](std::size_t i) {
    if (i >= args.size()) fail("BadInput", "tree " + verb + " needs a term");
    return parse_term(args[i]);
  };
  if (verb == "measure") {
    TreeTerm t = term(0);
    std::cout << "length=" << term_length(t) << " depth=" << term_depth(t)
              << " ary=" << term_ary(t);
    if (is_token_term(t)) std::cout << " tary=" << term_tary(t);
    std::cout << "\n";
  } else if (verb == "flatten") {
    std::cout << print_term(flatten(term(0))) << "\n";
  } else if (verb == "universal") {
    std::cout << print_term(universal_of(term(0))) << "\n";
  } else if (verb == "connect") {
    std::cout << print_term(connect(term(0), term(1))) << "\n";
  } else if (verb == "corr") {
    auto m = corr(term(0), term(1));
    if (!m) {
      std::cout << "none\n";
      return 1;
    }
    for (const auto& e : m->entries)
      std::cout << e.first.str() << " -> " << print_term(e.second) << "\n";
  } else if (verb == "scatter") {
    for (const auto& p : scatter_star(term(0))) std::cout << print_term(p) << "\n";
  } else {
    fail("BadInput", "unknown tree verb " + verb);
  }
  return 0;
}

int run_verify(const std::string& kind, const std::vector<std::string>& files) {
  TestFamily fam;
  std::vector<TokenClass> in;
  for (const auto& f : files) in.push_back(read_class(f));
  if (in.empty()) fail("BadInput", "verify needs input classes");
  fam = default_family(in[0].alpha.core);
  if (kind == "product") {
    ProductResult p = product(in.at(0), in.at(1));
    return verdict_exit(verify_product(in[0], in[1], p, fam));
  }
  if (kind == "coproduct") {
    CoproductResult c = coproduct(in.at(0), in.at(1));
    return verdict_exit(verify_coproduct(in[0], in[1], c, fam));
  }
  if (kind == "exponent") {
    ExponentResult e = exponent(in.at(0), in.at(1));
    return verdict_exit(verify_exponent(e, fam));
  }
  if (kind == "limit") {
    Diagram d;
    for (std::size_t i = 0; i < in.size(); ++i)
      d.objects.emplace_back("o" + std::to_string(i + 1), in[i]);
    LimitResult l = limit(d);
    return verdict_exit(verify_limit(d, l, fam));
  }
  if (kind == "terminal")
    return verdict_exit(verify_terminal(constant_class(ConstantKind::Terminal,
                                                       in[0].alpha.core),
                                        fam));
  if (kind == "initial")
    return verdict_exit(verify_initial(constant_class(ConstantKind::Initial,
                                                      in[0].alpha.core),
                                       fam));
  fail("BadInput", "unknown verify kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token class toolkit"};
  app.require_subcommand(1);

  std::string op_name, out_path, syms;
  std::vector<std::string> op_files, map_arg;
  CLI::App* op = app.add_subcommand("op", "apply a class operator");
  op->add_option("name", op_name)->required();
  op->add_option("inputs", op_files);
  op->add_option("-o,--out", out_path);
  op->add_option("--map", map_arg);
  op->add_option("--syms", syms);

  std::string check_kind, check_a, check_b;
  std::size_t bound = 6;
  CLI::App* check = app.add_subcommand("check", "subclass checks");
  check->add_option("kind", check_kind)->required();
  check->add_option("a", check_a)->required();
  check->add_option("b", check_b)->required();
  check->add_option("--bound", bound);

  std::string hom_a, hom_b;
  CLI::App* hom = app.add_subcommand("hom", "enumerate maps");
  hom->add_option("a", hom_a)->required();
  hom->add_option("b", hom_b)->required();

  std::string verify_kind, family_name = "default";
  std::vector<std::string> verify_files;
  CLI::App* verify = app.add_subcommand("verify", "oracle verification");
  verify->add_option("kind", verify_kind)->required();
  verify->add_option("inputs", verify_files);
  verify->add_option("--family", family_name);

  std::string tree_verb;
  std::vector<std::string> tree_args;
  CLI::App* tree = app.add_subcommand("tree", "tree token operations");
  tree->add_option("verb", tree_verb)->required();
  tree->add_option("terms", tree_args);

  std::string rep_kind, rep_file;
  CLI::App* rep = app.add_subcommand("rep", "encode a structured object");
  rep->add_option("kind", rep_kind)->required();
  rep->add_option("file", rep_file)->required();

  std::vector<std::string> reify_terms;
  CLI::App* reify = app.add_subcommand("reify", "reify tree tokens");
  reify->add_option("terms", reify_terms)->required();

  std::vector<std::string> corr_t1, corr_t2;
  std::size_t depth = 2;
  CLI::App* homcorr = app.add_subcommand("hom-corr", "tree map vs p-map correspondence");
  homcorr->add_option("--t1", corr_t1)->required();
  homcorr->add_option("--t2", corr_t2)->required();
  homcorr->add_option("--depth", depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (op->parsed()) return run_op(op_name, op_files, map_arg, syms, out_path);
    if (check->parsed()) {
      TokenClass a = read_class(check_a);
      TokenClass b = read_class(check_b);
      if (check_kind == "subclass") return verdict_exit(is_subclass(a, b, bound));
      if (check_kind == "pullback-subclass")
        return verdict_exit(
            subclass_via_pullbacks(a, b, ElemMap::identity(a.alpha.base)));
      fail("BadInput", "unknown check kind " + check_kind);
    }
    if (hom->parsed()) {
      HomSet h = hom_enumerate(read_class(hom_a), read_class(hom_b));
      std::cout << "maps=" << h.maps.size() << " undecided=" << h.undecided << "\n";
      for (const auto& m : h.maps) emit_map(m);
      return h.undecided == 0 ? 0 : 3;
    }
    if (verify->parsed()) return run_verify(verify_kind, verify_files);
    if (tree->parsed()) return run_tree(tree_verb, tree_args);
    if (rep->parsed()) {
      StructureDoc doc = read_structure(rep_file);
      if (doc.is_top != (rep_kind == "top"))
        fail("SchemaError", "document kind does not match " + rep_kind);
      emit_class(doc.is_top ? rep_top(doc.top) : rep_structured(doc.obj), "");
      return 0;
    }
    if (reify->parsed()) {
      std::vector<TreeTerm> terms;
      for (const auto& t : reify_terms) terms.push_back(parse_term(t));
      TreeClass t = mk_tclass("cli", base_of(terms), {}, terms);
      emit_class(reify_class(t), "");
      return 0;
    }
    if (homcorr->parsed()) {
      std::vector<TreeTerm> h1, h2;
      for (const auto& t : corr_t1) h1.push_back(parse_term(t));
      for (const auto& t : corr_t2) h2.push_back(parse_term(t));
      TreeClass t1 = mk_tclass("t1", base_of(h1), {}, h1);
      TreeClass t2 = mk_tclass("t2", base_of(h2), {}, h2);
      HomCorrReport r = hom_correspondence(t1, t2, depth);
      std::cout << "tmaps=" << r.tmaps.size() << " pmaps=" << r.pmap_count
                << " tmaps_reify=" << (r.every_tmap_reifies ? "yes" : "no")
                << " pmaps_restrict=" << (r.every_pmap_restricts ? "yes" : "no")
                << " counts_match=" << (r.counts_match ? "yes" : "no") << "\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cout << e.what() << "\n";
    return error_exit(e);
  }
  return 2;
}
