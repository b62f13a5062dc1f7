#include "psi/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "psi/analysis.hpp"
#include "psi/checkpoint.hpp"
#include "psi/group_spec.hpp"
#include "psi/polynomial.hpp"
#include "psi/psi_core.hpp"

namespace psi::cli {

using nlohmann::json;

std::vector<ElementTuple> parse_generators(const std::string& text) {
  std::vector<ElementTuple> gens;
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw SpecParseError(std::string("expected '") + c + "' in generator list", pos);
    }
    ++pos;
  };
  auto integer = [&] {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      const auto digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw SpecParseError("residue too large", start);
      v = v * 10 + digit;
      ++pos;
    }
    if (pos == start) throw SpecParseError("expected residue in generator list", start);
    return v;
  };
  if (text.empty()) return gens;
  while (true) {
    expect('(');
    ElementTuple g;
    g.push_back(integer());
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      g.push_back(integer());
    }
    expect(')');
    gens.push_back(std::move(g));
    if (pos == text.size()) break;
    expect(',');
  }
  return gens;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

struct CommonFlags {
  bool json_out = false;
  std::uint64_t max_enum = kDefaultEnumerationCap;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

// psi of one primary component by the named method.
BigNat component_psi(std::uint64_t p, const Partition& shape, const std::string& method) {
  const auto& a = shape.parts();
  auto family_error = [&] {
    return std::invalid_argument("method " + method + " does not apply to shape " +
                                 shape.to_string());
  };
  if (method == "theorem1") return psi_p(PGroupType(p, shape));
  if (method == "remark3") return psi_p_alt(PGroupType(p, shape));
  if (method == "symbolic") return psi_symbolic(shape).evaluate(BigInt(p));
  if (method == "corollary2a") {
    if (shape.k() != 1) throw family_error();
    return psi_cyclic(p, shape.n());
  }
  if (method == "corollary2b") {
    if (shape != Partition::elementary(shape.n())) throw family_error();
    return psi_elem_abelian(p, shape.n());
  }
  if (method == "corollary2c") {
    const bool ok = shape.largest() == 2 &&
                    std::all_of(a.begin(), a.end() - 1, [](unsigned v) { return v == 1; });
    if (!ok) throw family_error();
    return psi_near_elem(p, shape.n());
  }
  if (method == "corollary2d") {
    if (shape.k() != 2) throw family_error();
    return psi_rank2(p, a[0], a[1]);
  }
  if (method == "corollary2e") {
    if (shape.k() != 3) throw family_error();
    return psi_rank3(p, a[0], a[1], a[2]);
  }
  throw std::invalid_argument("unknown method " + method);
}

int cmd_compute(const std::string& spec, const std::string& method, bool verify,
                const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const AbelianGroupType g = parse_group_spec(spec);
  BigNat value = 1;
  if (method == "bruteforce") {
    value = psi_bruteforce(ComponentList(g.cyclic_moduli()), flags.max_enum);
  } else {
    for (const auto& [p, shape] : g.components()) value *= component_psi(p, shape, method);
  }
  const auto elapsed = micros_since(start);

  json doc{{"command", "compute"},
           {"group", format_group_spec(g)},
           {"order", to_decimal(g.order())},
           {"psi", to_decimal(value)},
           {"method", method},
           {"elapsed_us", elapsed}};
  int code = kOk;
  std::vector<std::pair<std::string, std::string>> rows{{"group", format_group_spec(g)},
                                                        {"order", to_decimal(g.order())},
                                                        {"psi", to_decimal(value)},
                                                        {"method", method}};
  if (verify) {
    if (g.order() > flags.max_enum) {
      doc["verify"] = {{"skipped", "order above the enumeration cap"}};
      rows.emplace_back("oracle", "skipped (order above --max-enum)");
    } else {
      const BigNat oracle = psi_bruteforce(ComponentList(g.cyclic_moduli()), flags.max_enum);
      const bool match = oracle == value;
      doc["verify"] = {{"oracle", to_decimal(oracle)}, {"match", match}};
      rows.emplace_back("oracle", to_decimal(oracle) + (match ? " (match)" : " (MISMATCH)"));
      if (!match) code = kAnomaly;
    }
  }
  if (flags.json_out) {
    emit(out, doc);
  } else {
    print_rows(out, rows);
  }
  return code;
}

int cmd_list(std::uint64_t order, const CommonFlags& flags, std::ostream& out) {
  const auto types = group_types_of_order(order);
  json rows = json::array();
  for (const auto& g : types) {
    rows.push_back({{"group", format_group_spec(g)}, {"psi", to_decimal(psi_abelian(g))}});
  }
  if (flags.json_out) {
    emit(out, {{"command", "list"}, {"order", std::to_string(order)}, {"types", rows}});
    return kOk;
  }
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r["group"].get<std::string>().size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "group" << "psi\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r["group"].get<std::string>()
        << r["psi"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_poly(const std::string& shape_text, const CommonFlags& flags, std::ostream& out) {
  const Partition shape = parse_shape(shape_text);
  const IntPoly poly = psi_symbolic(shape);
  const std::size_t degree = poly.degree().value_or(0);
  if (flags.json_out) {
    emit(out, {{"command", "poly"},
               {"shape", shape.to_string()},
               {"polynomial", poly.to_string()},
               {"degree", degree},
               {"method", "symbolic"}});
  } else {
    print_rows(out, {{"shape", shape.to_string()},
                     {"psi", poly.to_string()},
                     {"degree", std::to_string(degree)}});
  }
  return kOk;
}

int cmd_relative(const std::string& spec, const std::string& gens_text, const CommonFlags& flags,
                 std::ostream& out) {
  const AbelianGroupType g = parse_group_spec(spec);
  const ComponentList c(g.cyclic_moduli());
  const auto gens = parse_generators(gens_text);
  const SubgroupSet h = subgroup_closure(c, gens, flags.max_enum);
  const BigNat value = psi_relative(h);
  std::optional<BigNat> per_element;
  if (value % h.size() == 0) per_element = value / h.size();

  if (flags.json_out) {
    json doc{{"command", "relative"},
             {"group", format_group_spec(g)},
             {"order", std::to_string(c.order())},
             {"subgroup_order", std::to_string(h.size())},
             {"psi_relative", to_decimal(value)},
             {"method", "bruteforce"}};
    doc["psi_relative_over_subgroup_order"] =
        per_element ? json(to_decimal(*per_element)) : json(nullptr);
    emit(out, doc);
  } else {
    std::vector<std::pair<std::string, std::string>> rows{
        {"group", format_group_spec(g)},
        {"order", std::to_string(c.order())},
        {"|H|", std::to_string(h.size())},
        {"psi_H", to_decimal(value)}};
    rows.emplace_back("psi_H/|H|", per_element ? to_decimal(*per_element) : "not an integer");
    print_rows(out, rows);
  }
  return kOk;
}

void write_report(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw CheckpointError("cannot write " + tmp.string());
    f << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

json hits_json(const std::vector<DivisibleHit>& hits) {
  json arr = json::array();
  for (const auto& h : hits) {
    arr.push_back({{"order", h.order},
                   {"group", h.group},
                   {"psi", to_decimal(h.psi)},
                   {"quotient", to_decimal(h.quotient)}});
  }
  return arr;
}

struct SweepArgs {
  std::string kind;
  std::uint64_t from = 2;
  std::uint64_t to = 0;
  unsigned n = 0;
  std::uint64_t p = 0;
  int workers = 0;
  std::string checkpoint;
  bool resume = false;
};

int cmd_sweep(const SweepArgs& a, const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  if (a.kind == "monotonicity") {
    if (a.n == 0 || a.p == 0) throw std::invalid_argument("monotonicity needs --n and --p");
    if (!is_prime(a.p)) throw std::invalid_argument(std::to_string(a.p) + " is not prime");
    const MonotonicityReport r = monotonicity_check(a.n, a.p);
    json chain = json::array();
    for (const auto& e : r.chain) {
      chain.push_back({{"shape", e.shape.to_string()}, {"psi", to_decimal(e.psi)}});
    }
    json doc{{"command", "sweep"},          {"kind", "monotonicity"},
             {"n", a.n},                    {"p", a.p},
             {"chain_length", r.chain.size()}, {"violations", r.violations},
             {"min_is_elementary", r.min_is_elementary},
             {"max_is_cyclic", r.max_is_cyclic},
             {"chain", chain},              {"elapsed_us", micros_since(start)}};
    write_report(a.checkpoint, doc);
    if (flags.json_out) {
      emit(out, doc);
    } else {
      print_rows(out, {{"kind", "monotonicity"},
                       {"n", std::to_string(a.n)},
                       {"p", std::to_string(a.p)},
                       {"chain length", std::to_string(r.chain.size())},
                       {"violations", std::to_string(r.violations.size())},
                       {"min elementary", r.min_is_elementary ? "yes" : "NO"},
                       {"max cyclic", r.max_is_cyclic ? "yes" : "NO"}});
    }
    return r.ok() ? kOk : kAnomaly;
  }

  if (a.to < 2 && a.kind != "image") throw std::invalid_argument("--to must be >= 2");
  if (a.kind == "conjecture") {
    SweepCheckpoint cp;
    if (a.resume && !a.checkpoint.empty() && std::filesystem::exists(a.checkpoint)) {
      cp = load_checkpoint(a.checkpoint);
    }
    SweepOptions options;
    options.workers = a.workers;
    if (!a.checkpoint.empty()) {
      options.on_block = [&](const SweepCheckpoint& partial) {
        save_checkpoint(a.checkpoint, partial);
        return true;
      };
    }
    const std::uint64_t resumed_from = cp.max_done;
    if (cp.max_done < a.to) cp = conjecture_sweep(a.from, a.to, std::move(cp), options);
    const auto summary = json::parse(checkpoint_to_string(cp));
    json doc{{"command", "sweep"},
             {"kind", "conjecture"},
             {"from", a.from},
             {"to", a.to},
             {"resumed_after", resumed_from},
             {"checkpoint", summary},
             {"elapsed_us", micros_since(start)}};
    if (flags.json_out) {
      emit(out, doc);
    } else {
      print_rows(out, {{"kind", "conjecture"},
                       {"range", std::to_string(a.from) + ".." + std::to_string(a.to)},
                       {"max_done", std::to_string(cp.max_done)},
                       {"collisions", std::to_string(cp.collisions.size())},
                       {"divisible hits", std::to_string(cp.divisible_hits.size())}});
      for (const auto& c : cp.collisions) {
        out << "collision order " << c.order << ": " << c.first << " and " << c.second
            << " share psi " << to_decimal(c.psi) << "\n";
      }
    }
    return cp.collisions.empty() ? kOk : kAnomaly;
  }

  if (a.kind == "divisibility") {
    const auto hits = divisibility_search(a.to, a.workers);
    std::size_t even = 0;
    for (const auto& h : hits) even += h.order % 2 == 0 ? 1 : 0;
    json doc{{"command", "sweep"},
             {"kind", "divisibility"},
             {"max_order", a.to},
             {"hits", hits_json(hits)},
             {"even_order_hits", even},
             {"note", "minimality of the first hit is an empirical result of this search"},
             {"elapsed_us", micros_since(start)}};
    write_report(a.checkpoint, doc);
    if (flags.json_out) {
      emit(out, doc);
    } else {
      print_rows(out, {{"kind", "divisibility"},
                       {"max order", std::to_string(a.to)},
                       {"hits", std::to_string(hits.size())},
                       {"even-order hits", std::to_string(even)}});
      for (const auto& h : hits) {
        out << "order " << h.order << ": " << h.group << " psi " << to_decimal(h.psi) << " = "
            << h.order << " * " << to_decimal(h.quotient) << "\n";
      }
    }
    return hits.empty() ? kOk : kAnomaly;
  }

  if (a.kind == "image") {
    if (a.to < 1) throw std::invalid_argument("--to must be >= 1");
    const ImageReport r = image_probe(a.to, a.workers);
    json smallest = json::array();
    for (const auto& v : r.smallest_values) smallest.push_back(to_decimal(v));
    json doc{{"command", "sweep"},
             {"kind", "image"},
             {"max_order", a.to},
             {"type_count", r.type_count},
             {"all_odd", r.all_odd},
             {"lower_bound_holds", r.lower_bound_holds},
             {"five_present", r.five_present},
             {"five_absence_conclusive", r.five_absence_conclusive},
             {"argument", r.argument},
             {"smallest_values", smallest},
             {"elapsed_us", micros_since(start)}};
    write_report(a.checkpoint, doc);
    if (flags.json_out) {
      emit(out, doc);
    } else {
      print_rows(out, {{"kind", "image"},
                       {"max order", std::to_string(a.to)},
                       {"types", std::to_string(r.type_count)},
                       {"all odd", r.all_odd ? "yes" : "NO"},
                       {"psi >= 2|G|-1", r.lower_bound_holds ? "yes" : "NO"},
                       {"5 present", r.five_present ? "YES" : "no"},
                       {"argument", r.argument}});
    }
    const bool anomaly = !r.all_odd || !r.lower_bound_holds || r.five_present;
    return anomaly ? kAnomaly : kOk;
  }
  throw std::invalid_argument("unknown sweep kind " + a.kind);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sums of element orders of finite abelian groups"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_flag("--json", flags.json_out, "Emit one JSON document");
  app.add_option("--max-enum", flags.max_enum, "Element cap for brute-force enumeration")
      ->check(CLI::PositiveNumber);

  std::string spec;
  std::string method = "theorem1";
  bool verify = false;
  auto* compute = app.add_subcommand("compute", "psi of a group given as e.g. 13^[1,1]*23");
  compute->add_option("group", spec, "Group specification")->required();
  compute->add_flag("--verify", verify, "Cross-check against brute-force enumeration");
  compute->add_option("--method", method, "Evaluation route")
      ->check(CLI::IsMember({"theorem1", "remark3", "corollary2a", "corollary2b", "corollary2c",
                             "corollary2d", "corollary2e", "bruteforce", "symbolic"}));

  std::uint64_t list_order = 0;
  auto* list = app.add_subcommand("list", "Every abelian type of an order with its psi");
  list->add_option("order", list_order, "Group order")->required();

  std::string shape;
  auto* poly = app.add_subcommand("poly", "psi of a p-group shape as a polynomial in p");
  poly->add_option("shape", shape, "Exponent list such as [1,1,2]")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Range verifications");
  sweep->add_option("kind", sweep_args.kind, "conjecture | divisibility | monotonicity | image")
      ->required()
      ->check(CLI::IsMember({"conjecture", "divisibility", "monotonicity", "image"}));
  sweep->add_option("--from", sweep_args.from, "First order (conjecture)");
  sweep->add_option("--to", sweep_args.to, "Last order");
  sweep->add_option("--n", sweep_args.n, "Exponent (monotonicity)");
  sweep->add_option("--p", sweep_args.p, "Prime (monotonicity)");
  sweep->add_option("--workers", sweep_args.workers, "Worker threads, 0 for all")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--checkpoint", sweep_args.checkpoint, "Checkpoint or report file");
  sweep->add_flag("--resume", sweep_args.resume, "Continue from an existing checkpoint");

  std::string rel_spec;
  std::string rel_gens;
  auto* relative = app.add_subcommand("relative", "psi relative to the subgroup H = <gens>");
  relative->add_option("group", rel_spec, "Group specification")->required();
  relative->add_option("generators", rel_gens, "Residue tuples such as (2) or (1,0),(0,1)");

  for (auto* sub : {compute, list, poly, sweep, relative}) {
    sub->add_flag("--json", flags.json_out, "Emit one JSON document");
    sub->add_option("--max-enum", flags.max_enum, "Element cap for brute-force enumeration")
        ->check(CLI::PositiveNumber);
  }

  std::vector<const char*> argv{"psi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(spec, method, verify, flags, out);
    if (*list) {
      if (list_order == 0) throw std::invalid_argument("order must be positive");
      return cmd_list(list_order, flags, out);
    }
    if (*poly) return cmd_poly(shape, flags, out);
    if (*sweep) return cmd_sweep(sweep_args, flags, out);
    if (*relative) return cmd_relative(rel_spec, rel_gens, flags, out);
  } catch (const ExactDivisionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace psi::cli
