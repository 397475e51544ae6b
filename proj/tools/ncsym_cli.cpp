#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ncsym/element.hpp"
#include "ncsym/errors.hpp"
#include "ncsym/json_io.hpp"
#include "ncsym/lattice.hpp"
#include "ncsym/lattice_algebra.hpp"
#include "ncsym/set_partition.hpp"
#include "ncsym/verify.hpp"

namespace {

using ncsym::Json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ncsym::SyntaxError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// '@path' means "read the argument from this file".
std::string load_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool looks_like_json(const std::string& s) {
  std::string t = trim(s);
  return !t.empty() && (t[0] == '{' || t[0] == '[');
}

ncsym::SetPartition parse_partition_arg(const std::string& raw) {
  std::string text = load_arg(raw);
  if (looks_like_json(text)) {
    return ncsym::partition_from_json(ncsym::parse_json(text));
  }
  return ncsym::parse_partition(trim(text));
}

// Partition text is promoted to a basis vector; JSON carries its own basis,
// which must agree with an explicit --from/--basis flag when one was given.
ncsym::NCSymElement parse_element_arg(const std::string& raw,
                                      std::optional<ncsym::Basis> hint) {
  std::string text = load_arg(raw);
  if (looks_like_json(text)) {
    ncsym::NCSymElement e = ncsym::element_from_json(ncsym::parse_json(text));
    if (hint && e.basis() != *hint) {
      throw ncsym::BasisMismatchError(
          std::string("element is in basis '") +
          ncsym::basis_letter(e.basis()) + "' but the flag asked for '" +
          ncsym::basis_letter(*hint) + "'");
    }
    return e;
  }
  ncsym::Basis b = hint.value_or(ncsym::Basis::m);
  return ncsym::NCSymElement::basis_vector(b,
                                           ncsym::parse_partition(trim(text)));
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ncsym::SyntaxError(std::string("expected an integer for ") + what +
                             ", got '" + text + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::string t = trim(text);
  if (t.empty() || t == "e") return values;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string piece =
        (comma == std::string::npos) ? t.substr(pos) : t.substr(pos, comma - pos);
    values.push_back(parse_int(piece, what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

// Blocks of arbitrary positive integers, same separators as partition text.
std::vector<std::vector<int>> parse_block_list(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::string t = trim(text);
  if (t == "e" || t.empty()) return blocks;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t bar = t.find('|', pos);
    std::string piece =
        (bar == std::string::npos) ? t.substr(pos) : t.substr(pos, bar - pos);
    blocks.push_back(parse_int_list(piece, "a block element"));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return blocks;
}

ncsym::Basis basis_arg(const std::string& s) {
  return ncsym::basis_from_letter(s.at(0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ncsym: exact computer algebra for symmetric functions in "
      "noncommuting variables and set-partition lattice algebras"};
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "emit JSON instead of plain text");

  int exit_code = 0;

  auto emit = [&json_out](const std::string& text, const Json& j) {
    if (json_out) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  };

  // enumerate -----------------------------------------------------------
  int en_n = 0;
  bool en_count = false;
  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "list the set partitions of {1..n} in canonical order");
  cmd_enum->fallthrough();
  cmd_enum->add_option("n", en_n, "ground-set size")->required();
  cmd_enum->add_flag("--count", en_count,
                     "print only the partition count (Bell number)");
  cmd_enum->callback([&] {
    if (en_count) {
      if (en_n < 0 || en_n > 500) {
        throw ncsym::RangeError("--count supports 0 <= n <= 500");
      }
      std::string value = ncsym::to_decimal(ncsym::bell(en_n));
      emit(value, Json{{"value", value}});
      return;
    }
    if (en_n < 0 || en_n > 11) {
      throw ncsym::RangeError(
          "listing all partitions supports 0 <= n <= 11; use --count above "
          "that");
    }
    const auto& parts = ncsym::partitions_of(en_n);
    if (json_out) {
      Json arr = Json::array();
      for (const auto& p : parts) arr.push_back(ncsym::partition_to_json(p));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& p : parts) {
        std::cout << ncsym::format_partition(p) << "\n";
      }
    }
  });

  // mobius ---------------------------------------------------------------
  std::string mo_a, mo_b;
  CLI::App* cmd_mobius = app.add_subcommand(
      "mobius", "Mobius function of the refinement order, mu(finer, coarser)");
  cmd_mobius->fallthrough();
  cmd_mobius->add_option("finer", mo_a, "finer partition")->required();
  cmd_mobius->add_option("coarser", mo_b, "coarser partition")->required();
  cmd_mobius->callback([&] {
    ncsym::SetPartition a = parse_partition_arg(mo_a);
    ncsym::SetPartition b = parse_partition_arg(mo_b);
    std::string value = ncsym::to_decimal(ncsym::mobius(a, b));
    emit(value, Json{{"value", value}});
  });

  // op ---------------------------------------------------------------------
  // Two fixed positionals rather than a vector: CLI11 expands [..]-shaped
  // values of vector options into lists, which would eat JSON partitions.
  std::string op_kind, op_a, op_b;
  CLI::App* cmd_op = app.add_subcommand(
      "op",
      "lattice and structural operations: meet, join, concat, refines, "
      "split, restrict, standardize, shape, type");
  cmd_op->fallthrough();
  cmd_op->add_option("kind", op_kind, "operation name")->required();
  CLI::Option* op_a_opt = cmd_op->add_option("a", op_a, "first argument");
  CLI::Option* op_b_opt = cmd_op->add_option("b", op_b, "second argument");
  cmd_op->callback([&] {
    std::vector<std::string> op_args;
    if (op_a_opt->count() > 0) op_args.push_back(op_a);
    if (op_b_opt->count() > 0) op_args.push_back(op_b);
    auto need = [&](std::size_t k, const char* usage) {
      if (op_args.size() != k) {
        throw CLI::ValidationError("op",
                                   std::string(op_kind) + " expects " + usage);
      }
    };
    auto emit_partition = [&](const ncsym::SetPartition& p) {
      emit(ncsym::format_partition(p), ncsym::partition_to_json(p));
    };
    if (op_kind == "meet" || op_kind == "join" || op_kind == "concat") {
      need(2, "two partitions");
      ncsym::SetPartition a = parse_partition_arg(op_args[0]);
      ncsym::SetPartition b = parse_partition_arg(op_args[1]);
      if (op_kind == "meet") {
        emit_partition(ncsym::meet(a, b));
      } else if (op_kind == "join") {
        emit_partition(ncsym::join(a, b));
      } else {
        emit_partition(ncsym::concat(a, b));
      }
    } else if (op_kind == "refines") {
      need(2, "two partitions");
      bool r = ncsym::refines(parse_partition_arg(op_args[0]),
                              parse_partition_arg(op_args[1]));
      emit(r ? "true" : "false", Json{{"value", r}});
    } else if (op_kind == "split") {
      need(2, "a partition and a cut position");
      ncsym::SetPartition a = parse_partition_arg(op_args[0]);
      int k = parse_int(op_args[1], "the cut position");
      auto s = ncsym::split(a, k);
      if (!s) {
        emit("none", Json(nullptr));
      } else {
        emit(ncsym::format_partition(s->first) + " " +
                 ncsym::format_partition(s->second),
             Json{{"left", ncsym::partition_to_json(s->first)},
                  {"right", ncsym::partition_to_json(s->second)}});
      }
    } else if (op_kind == "restrict") {
      need(2, "a partition and a comma-separated list of block indices");
      ncsym::SetPartition a = parse_partition_arg(op_args[0]);
      std::vector<int> indices = parse_int_list(op_args[1], "a block index");
      emit_partition(ncsym::restrict_blocks(a, indices));
    } else if (op_kind == "standardize") {
      need(1, "blocks of arbitrary positive integers");
      emit_partition(
          ncsym::SetPartition::standardized(parse_block_list(op_args[0])));
    } else if (op_kind == "shape") {
      need(1, "a partition");
      std::vector<int> sizes = ncsym::shape(parse_partition_arg(op_args[0]));
      std::string text;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(sizes[i]);
      }
      emit(text, Json(sizes));
    } else if (op_kind == "type") {
      need(1, "a comma-separated value sequence");
      std::vector<int> values = parse_int_list(op_args[0], "a value");
      emit_partition(ncsym::SetPartition::type_of(values));
    } else {
      throw CLI::ValidationError("op", "unknown operation '" + op_kind + "'");
    }
  });

  // convert ----------------------------------------------------------------
  std::string cv_from, cv_to, cv_arg;
  CLI::App* cmd_convert =
      app.add_subcommand("convert", "change of basis between m, p and x");
  cmd_convert->fallthrough();
  CLI::Option* cv_from_opt =
      cmd_convert->add_option("--from", cv_from, "basis of a partition argument")
          ->check(CLI::IsMember({"m", "p", "x"}));
  cmd_convert->add_option("--to", cv_to, "target basis")
      ->required()
      ->check(CLI::IsMember({"m", "p", "x"}));
  cmd_convert->add_option("element", cv_arg,
                          "partition text, inline JSON, or @file")
      ->required();
  cmd_convert->callback([&] {
    std::optional<ncsym::Basis> hint;
    if (cv_from_opt->count() > 0) hint = basis_arg(cv_from);
    ncsym::NCSymElement e = parse_element_arg(cv_arg, hint);
    ncsym::NCSymElement out = ncsym::convert(e, basis_arg(cv_to));
    emit(ncsym::format_element(out), ncsym::element_to_json(out));
  });

  // mul ----------------------------------------------------------------------
  std::string mu_basis, mu_a, mu_b;
  CLI::App* cmd_mul = app.add_subcommand("mul", "product of two elements");
  cmd_mul->fallthrough();
  CLI::Option* mu_basis_opt =
      cmd_mul->add_option("--basis", mu_basis, "basis of partition arguments")
          ->check(CLI::IsMember({"m", "p", "x"}));
  cmd_mul->add_option("left", mu_a, "left factor")->required();
  cmd_mul->add_option("right", mu_b, "right factor")->required();
  cmd_mul->callback([&] {
    std::optional<ncsym::Basis> hint;
    if (mu_basis_opt->count() > 0) hint = basis_arg(mu_basis);
    ncsym::NCSymElement a = parse_element_arg(mu_a, hint);
    ncsym::NCSymElement b = parse_element_arg(mu_b, hint);
    ncsym::NCSymElement out = ncsym::multiply(a, b);
    emit(ncsym::format_element(out), ncsym::element_to_json(out));
  });

  // coproduct ------------------------------------------------------------
  std::string cp_kind, cp_basis, cp_arg;
  CLI::App* cmd_cop = app.add_subcommand(
      "coproduct", "external (deconcatenation) or internal coproduct");
  cmd_cop->fallthrough();
  cmd_cop->add_option("--kind", cp_kind, "which coproduct")
      ->required()
      ->check(CLI::IsMember({"external", "internal"}));
  CLI::Option* cp_basis_opt =
      cmd_cop->add_option("--basis", cp_basis, "basis of a partition argument")
          ->check(CLI::IsMember({"m", "p", "x"}));
  cmd_cop->add_option("element", cp_arg, "partition text, inline JSON, or @file")
      ->required();
  cmd_cop->callback([&] {
    std::optional<ncsym::Basis> hint;
    if (cp_basis_opt->count() > 0) hint = basis_arg(cp_basis);
    ncsym::NCSymElement e = parse_element_arg(cp_arg, hint);
    ncsym::TensorElement t;
    if (cp_kind == "internal") {
      t = ncsym::coproduct_internal(e);
    } else if (e.basis() == ncsym::Basis::x) {
      // No closed x-basis rule exists; evaluate through the m basis.
      t = ncsym::coproduct_external_x(e);
    } else {
      t = ncsym::coproduct_external(e);
    }
    emit(ncsym::format_tensor(t), ncsym::tensor_to_json(t));
  });

  // idempotent ---------------------------------------------------------
  std::string id_algebra, id_arg;
  CLI::App* cmd_idem = app.add_subcommand(
      "idempotent", "primitive orthogonal idempotent of a lattice algebra");
  cmd_idem->fallthrough();
  cmd_idem->add_option("--algebra", id_algebra, "which algebra")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "diag"}));
  cmd_idem->add_option("partition", id_arg, "label partition")->required();
  cmd_idem->callback([&] {
    ncsym::Algebra t = ncsym::algebra_from_name(id_algebra);
    ncsym::AlgebraElement e =
        ncsym::idempotent(t, parse_partition_arg(id_arg));
    emit(ncsym::format_algebra_element(e), ncsym::algebra_element_to_json(e));
  });

  // induct -----------------------------------------------------------------
  std::string in_algebra, in_a, in_b;
  CLI::App* cmd_induct = app.add_subcommand(
      "induct", "induction of an outer tensor of simple modules");
  cmd_induct->fallthrough();
  cmd_induct->add_option("--algebra", in_algebra, "which algebra")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "diag"}));
  cmd_induct->add_option("left", in_a, "left simple-module label")->required();
  cmd_induct->add_option("right", in_b, "right simple-module label")
      ->required();
  cmd_induct->callback([&] {
    ncsym::Algebra t = ncsym::algebra_from_name(in_algebra);
    ncsym::ModuleSum s = ncsym::induct_simple(t, parse_partition_arg(in_a),
                                              parse_partition_arg(in_b));
    emit(ncsym::format_module_sum(s), ncsym::module_sum_to_json(s));
  });

  // restrict -------------------------------------------------------------
  std::string re_algebra, re_arg;
  int re_cut = -1;
  bool re_all = false;
  CLI::App* cmd_restrict = app.add_subcommand(
      "restrict", "restriction of a simple module along a cut");
  cmd_restrict->fallthrough();
  cmd_restrict->add_option("--algebra", re_algebra, "which algebra")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "diag"}));
  CLI::Option* re_cut_opt = cmd_restrict->add_option(
      "--cut", re_cut, "cut position (default: sum over all cuts)");
  cmd_restrict->add_flag("--all-cuts", re_all,
                         "sum the restriction over every cut (the default)");
  cmd_restrict->add_option("partition", re_arg, "simple-module label")
      ->required();
  cmd_restrict->callback([&] {
    if (re_cut_opt->count() > 0 && re_all) {
      throw CLI::ValidationError("restrict",
                                 "--cut and --all-cuts are exclusive");
    }
    ncsym::Algebra t = ncsym::algebra_from_name(re_algebra);
    ncsym::SetPartition a = parse_partition_arg(re_arg);
    ncsym::PairModuleSum s = (re_cut_opt->count() > 0)
                                 ? ncsym::restrict_simple(t, re_cut, a)
                                 : ncsym::coproduct_restriction(t, a);
    emit(ncsym::format_pair_module_sum(s), ncsym::pair_module_sum_to_json(s));
  });

  // character ------------------------------------------------------------
  std::string ch_algebra, ch_label, ch_at;
  CLI::App* cmd_char = app.add_subcommand(
      "character", "simple-module character evaluated at a basis element");
  cmd_char->fallthrough();
  cmd_char->add_option("--algebra", ch_algebra, "which algebra")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "diag"}));
  cmd_char->add_option("label", ch_label, "simple-module label")->required();
  cmd_char->add_option("at", ch_at, "basis partition to evaluate at")
      ->required();
  cmd_char->callback([&] {
    ncsym::Algebra t = ncsym::algebra_from_name(ch_algebra);
    int v = ncsym::character(t, parse_partition_arg(ch_label),
                             parse_partition_arg(ch_at));
    emit(std::to_string(v), Json{{"value", v}});
  });

  // frobenius ------------------------------------------------------------
  std::string fr_algebra, fr_arg;
  CLI::App* cmd_frob = app.add_subcommand(
      "frobenius",
      "Frobenius image of a class sum (meet -> x, join -> m, diag -> p)");
  cmd_frob->fallthrough();
  CLI::Option* fr_algebra_opt =
      cmd_frob->add_option("--algebra", fr_algebra, "which algebra")
          ->check(CLI::IsMember({"meet", "join", "diag"}));
  cmd_frob->add_option("classes", fr_arg,
                       "partition text (single class) or module-sum JSON")
      ->required();
  cmd_frob->callback([&] {
    std::string text = load_arg(fr_arg);
    ncsym::ModuleSum s;
    if (looks_like_json(text)) {
      s = ncsym::module_sum_from_json(ncsym::parse_json(text));
      if (fr_algebra_opt->count() > 0 &&
          ncsym::algebra_from_name(fr_algebra) != s.algebra) {
        throw ncsym::TagMismatchError(
            "module sum does not belong to the algebra named by --algebra");
      }
    } else {
      if (fr_algebra_opt->count() == 0) {
        throw CLI::ValidationError(
            "frobenius", "--algebra is required with a partition argument");
      }
      s.algebra = ncsym::algebra_from_name(fr_algebra);
      s.add_term(ncsym::parse_partition(trim(text)), 1);
    }
    ncsym::NCSymElement e = ncsym::frobenius(s);
    emit(ncsym::format_element(e), ncsym::element_to_json(e));
  });

  // verify ------------------------------------------------------------------
  std::string vf_suite = "all";
  int vf_max_n = -1;
  unsigned vf_jobs = 0;
  std::string vf_out;
  bool vf_no_timing = false;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run an exhaustive verification suite and report");
  cmd_verify->fallthrough();
  cmd_verify->add_option(
      "--suite", vf_suite,
      "lattice, mobius, bases, theoremA, idempotents, modules, frobenius, "
      "realization, or all");
  cmd_verify->add_option("--max-n", vf_max_n,
                         "size/degree bound (default: per-suite preset)");
  cmd_verify->add_option("--jobs", vf_jobs,
                         "worker threads (default: hardware concurrency)");
  cmd_verify->add_option("--out", vf_out, "write the report here instead of "
                                          "standard output");
  cmd_verify->add_flag("--no-timing", vf_no_timing,
                       "omit the wall-clock line so reports compare "
                       "byte-for-byte");
  cmd_verify->callback([&] {
    unsigned jobs =
        (vf_jobs == 0) ? std::max(1u, std::thread::hardware_concurrency())
                       : vf_jobs;
    ncsym::verify::SuiteReport report =
        ncsym::verify::run_suite(vf_suite, vf_max_n, jobs);
    std::string payload =
        json_out
            ? ncsym::verify::render_json(report, !vf_no_timing).dump() + "\n"
            : ncsym::verify::render_text(report, !vf_no_timing);
    if (!vf_out.empty()) {
      std::ofstream out(vf_out, std::ios::binary);
      if (!out) {
        throw ncsym::RangeError("cannot open '" + vf_out + "' for writing");
      }
      out << payload;
    } else {
      std::cout << payload;
    }
    if (!report.ok()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ncsym::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
