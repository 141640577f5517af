// Command-line front end: every subcommand wraps one library operation and
// prints a JSON report with a stable key order.
//
// Exit codes: 0 success (mathematical negatives included), 2 input errors,
// 3 budget exhaustion.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gfg/json_io.hpp"
#include "gfg/measures.hpp"

using namespace gfg;
using jsonio::json;
using wordcore::Word;

namespace {

struct Options {
  bool compact = false;
  bool verify = false;
  long long budget = finquot::kDefaultTupleBudget;
};

json read_json_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return json::parse(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

Word parse_word_arg(const std::string& text, int rank) {
  if (!text.empty() && (text[0] == '[' || text[0] == '"'))
    return rank > 0 ? jsonio::word_from_json(json::parse(text), rank)
                    : jsonio::word_from_json(json::parse(text));
  if (rank > 0) return wordcore::parse_word(text, rank);
  return wordcore::parse_word(text);
}

finquot::GroupPtr group_from_spec_or_file(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::string path = spec.substr(1);
    return std::make_shared<const finquot::FiniteGroup>(
        jsonio::group_from_table_json(read_json_file(path), path));
  }
  return finquot::make_group(spec);
}

std::vector<finquot::GroupPtr> parse_family(const std::string& family) {
  std::vector<finquot::GroupPtr> out;
  std::string cur;
  std::stringstream ss(family);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(group_from_spec_or_file(cur));
  if (out.empty()) throw input_error("empty group family");
  return out;
}

void emit(const json& report, const Options& opt) {
  json out = report;
  out["schema"] = 1;
  std::string text = opt.compact ? out.dump() : out.dump(2);
  if (opt.verify) {
    std::string again =
        opt.compact ? json::parse(text).dump() : json::parse(text).dump(2);
    if (again != text)
      throw std::logic_error("report failed the byte round trip");
  }
  std::cout << text << "\n";
}

int int_of(long long v, const char* what) {
  if (v < 1 || v > 1'000'000'000)
    throw input_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with free-group words, tubular"
               " presentations, and finite quotients"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.compact, "compact single-line JSON output");
  app.add_flag("--verify", opt.verify,
               "re-parse the report and require a byte-identical dump");
  app.add_option("--budget", opt.budget, "resource cap for the subcommand")
      ->envname("GFG_BUDGET");

  std::string word_text, word2_text, file_arg, group_spec, family_spec;
  std::string lambda_text = "1/6", images_text, primes_text;
  std::vector<std::string> words_args;
  long long rank_arg = 0, gen_index = 1, power_n = 2, prime_p = 2;
  long long gens_arg = 0, max_len = 4, arity_arg = 0;
  bool sc_budget_hit = false;

  json report;

  auto* c_reduce = app.add_subcommand("reduce", "freely reduce a word");
  c_reduce->add_option("word", word_text)->required();
  c_reduce->add_option("--rank", rank_arg);
  c_reduce->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    report["word"] = jsonio::word_json(w);
    report["length"] = w.length();
    report["rank"] = w.rank();
  });

  auto* c_orbit = app.add_subcommand(
      "orbit", "decide whether two words lie in one Aut(F)-orbit");
  c_orbit->add_option("word1", word_text)->required();
  c_orbit->add_option("word2", word2_text)->required();
  c_orbit->add_option("--rank", rank_arg);
  c_orbit->callback([&] {
    int rank = static_cast<int>(rank_arg);
    Word w1 = parse_word_arg(word_text, rank);
    Word w2 = parse_word_arg(word2_text, rank);
    if (rank == 0) {
      rank = std::max(w1.rank(), w2.rank());
      w1 = wordcore::reduce(w1.letters(), rank);
      w2 = wordcore::reduce(w2.letters(), rank);
    }
    std::size_t cap = app.count("--budget")
                          ? static_cast<std::size_t>(opt.budget)
                          : 1'000'000;
    auto phi = wordcore::aut_orbit_equal(w1, w2, cap);
    report["equal"] = phi.has_value();
    report["witness"] = phi ? jsonio::automorphism_json(*phi) : json(nullptr);
  });

  auto* c_primitive =
      app.add_subcommand("primitive", "is the word part of a basis");
  c_primitive->add_option("word", word_text)->required();
  c_primitive->add_option("--rank", rank_arg);
  c_primitive->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    auto [minimal, witness] = wordcore::whitehead_minimize(w);
    report["primitive"] = minimal.length() == 1;
    report["minimal_form"] = jsonio::word_json(minimal);
    report["witness"] = jsonio::automorphism_json(witness);
  });

  auto* c_closure =
      app.add_subcommand("closure", "algebraic closure of a word");
  c_closure->add_option("word", word_text)->required();
  c_closure->add_option("--rank", rank_arg);
  c_closure->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    auto ac = wordcore::algebraic_closure(w);
    json basis = json::array();
    for (const Word& b : ac.factor_basis) basis.push_back(jsonio::word_json(b));
    report["basis"] = basis;
    report["factor_rank"] = ac.factor_basis.size();
    report["witness"] = jsonio::automorphism_json(ac.witness);
  });

  auto* c_malnormal =
      app.add_subcommand("malnormal", "check a family of cyclic subgroups");
  c_malnormal->add_option("words", words_args)->required();
  c_malnormal->add_option("--rank", rank_arg);
  c_malnormal->callback([&] {
    int rank = static_cast<int>(rank_arg);
    if (rank == 0)
      for (const auto& t : words_args)
        rank = std::max(rank, parse_word_arg(t, 0).rank());
    std::vector<Word> family;
    for (const auto& t : words_args) family.push_back(parse_word_arg(t, rank));
    report = jsonio::malnormality_json(family,
                                       wordcore::is_malnormal_family(family));
  });

  auto* c_collapse = app.add_subcommand(
      "collapse", "single-vertex presentation of a graph of groups");
  c_collapse->add_option("file", file_arg)->required();
  c_collapse->callback([&] {
    report = jsonio::hnn_json(
        jsonio::presentation_from_json(read_json_file(file_arg)));
  });

  auto* c_gamma =
      app.add_subcommand("gamma", "the labeled graph of a presentation");
  c_gamma->add_option("file", file_arg)->required();
  c_gamma->callback([&] {
    report = jsonio::gamma_json(
        jsonio::presentation_from_json(read_json_file(file_arg)));
  });

  auto* c_decide =
      app.add_subcommand("decide", "residual finiteness and LERF verdicts");
  c_decide->add_option("file", file_arg)->required();
  c_decide->callback([&] {
    auto h = jsonio::presentation_from_json(read_json_file(file_arg));
    report = jsonio::verdict_json(h, tubular::decide(h));
  });

  auto* c_britton = app.add_subcommand(
      "britton", "pinch reduction of a word over base and stable letters");
  c_britton->add_option("file", file_arg)->required();
  c_britton->add_option("word", word_text)->required();
  c_britton->callback([&] {
    auto h = jsonio::presentation_from_json(read_json_file(file_arg));
    tubular::MixedWord w =
        (!word_text.empty() && word_text[0] == '[')
            ? tubular::make_mixed(h,
                                  json::parse(word_text).get<std::vector<int>>())
            : tubular::parse_mixed(h, word_text);
    auto reduced = tubular::britton_reduce(h, w);
    report["reduced"] = tubular::mixed_text(h, reduced);
    report["certified_trivial"] = reduced.empty();
  });

  auto* c_edges = app.add_subcommand(
      "edges", "closure descriptors of the edge groups in the completion");
  c_edges->add_option("file", file_arg)->required();
  c_edges->callback([&] {
    auto h = jsonio::presentation_from_json(read_json_file(file_arg));
    report["edges"] =
        jsonio::edge_closures_json(tubular::edge_closure_descriptor(h));
  });

  auto* c_cohom = app.add_subcommand(
      "cohom", "mod-p cohomology dimensions and Gamma bookkeeping");
  c_cohom->add_option("file", file_arg)->required();
  c_cohom->add_option("--prime", prime_p)->required();
  c_cohom->callback([&] {
    auto h = jsonio::presentation_from_json(read_json_file(file_arg));
    int p = int_of(prime_p, "prime");
    report = jsonio::cohomology_json(tubular::cohomology_report(h, p), p);
  });

  auto* c_sc_check =
      app.add_subcommand("sc-check", "metric small-cancellation check");
  c_sc_check->add_option("relators", words_args)->required();
  c_sc_check->add_option("--lambda", lambda_text);
  c_sc_check->add_option("--rank", rank_arg);
  c_sc_check->callback([&] {
    int rank = static_cast<int>(rank_arg);
    if (rank == 0)
      for (const auto& t : words_args)
        rank = std::max(rank, parse_word_arg(t, 0).rank());
    std::vector<Word> relators;
    for (const auto& t : words_args)
      relators.push_back(parse_word_arg(t, rank));
    auto lambda = smallcancel::Rational::parse(lambda_text);
    auto sym = smallcancel::symmetrize(relators);
    report = jsonio::metric_report_json(
        sym, smallcancel::check_metric(sym, lambda), lambda);
    report["pieces"] = jsonio::pieces_json(smallcancel::enumerate_pieces(sym));
  });

  auto* c_sc_exp = app.add_subcommand(
      "sc-exponents", "smallest power making a malnormal family C'(lambda)");
  c_sc_exp->add_option("words", words_args)->required();
  c_sc_exp->add_option("--lambda", lambda_text);
  c_sc_exp->add_option("--rank", rank_arg);
  c_sc_exp->add_option("--family", family_spec);
  c_sc_exp->callback([&] {
    int rank = static_cast<int>(rank_arg);
    if (rank == 0)
      for (const auto& t : words_args)
        rank = std::max(rank, parse_word_arg(t, 0).rank());
    std::vector<Word> family;
    for (const auto& t : words_args) family.push_back(parse_word_arg(t, rank));
    auto lambda = smallcancel::Rational::parse(lambda_text);
    int budget = app.count("--budget") ? int_of(opt.budget, "budget") : 512;
    auto n = smallcancel::find_exponents(family, lambda, budget);
    report["lambda"] = lambda.str();
    report["exponent"] = n ? json(*n) : json(nullptr);
    if (!n) {
      report["budget"] = budget;
      sc_budget_hit = true;
      return;
    }
    json orders = json::array();
    for (const Word& a : family) {
      json oj;
      oj["word"] = jsonio::word_json(a);
      oj["order"] = *n;
      orders.push_back(oj);
    }
    report["orders_in_quotient"] = orders;
    std::vector<finquot::GroupPtr> probes =
        family_spec.empty() ? std::vector<finquot::GroupPtr>{finquot::make_group(
                                  "C" + std::to_string(*n))}
                            : parse_family(family_spec);
    std::vector<Word> relators;
    for (const Word& a : family) relators.push_back(a.pow(*n));
    json checks = json::array();
    for (const auto& m : probes) {
      bool divides_all = true, exact_all = false;
      std::vector<int> tuple(rank, 0);
      for (bool done = false; !done;) {
        bool ok = true;
        for (const Word& r : relators)
          if (finquot::eval_word(*m, r, tuple) != m->id()) ok = false;
        if (ok) {
          bool all_exact = true;
          for (const Word& a : family) {
            int ord = m->element_order(finquot::eval_word(*m, a, tuple));
            if (*n % ord != 0) divides_all = false;
            if (ord != *n) all_exact = false;
          }
          if (all_exact) exact_all = true;
        }
        int pos = rank - 1;
        while (pos >= 0 && ++tuple[pos] == m->order()) {
          tuple[pos] = 0;
          --pos;
        }
        done = pos < 0;
      }
      json cj;
      cj["group"] = m->name();
      cj["orders_divide"] = divides_all;
      cj["realizes_exact_orders"] = exact_all;
      checks.push_back(cj);
    }
    report["quotient_check"] = checks;
  });

  auto* c_fox = app.add_subcommand("fox", "Fox derivative of a word");
  c_fox->add_option("word", word_text)->required();
  c_fox->add_option("--gen", gen_index);
  c_fox->add_option("--rank", rank_arg);
  c_fox->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    report["derivative"] = jsonio::group_ring_json(
        foxcalc::fox_derivative(w, int_of(gen_index, "generator index")));
    report["identity_holds"] = foxcalc::verify_fundamental_identity(w);
  });

  auto* c_tau = app.add_subcommand("tau", "row of the resolution map");
  c_tau->add_option("word", word_text)->required();
  c_tau->add_option("--n", power_n);
  c_tau->add_option("--rank", rank_arg);
  c_tau->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    json row = json::array();
    for (const auto& e : foxcalc::tau_row(w, int_of(power_n, "n")))
      row.push_back(jsonio::group_ring_json(e));
    report["row"] = row;
  });

  auto* c_trace = app.add_subcommand(
      "trace", "trace element of F_p[Z/n] for gcd(n, p) = 1");
  c_trace->add_option("--n", power_n)->required();
  c_trace->add_option("--prime", prime_p)->required();
  c_trace->callback([&] {
    auto tr =
        foxcalc::trace_element(int_of(power_n, "n"), int_of(prime_p, "prime"));
    report = jsonio::algebra_json(tr);
    report["augmentation"] = tr.augmentation();
  });

  auto* c_res = app.add_subcommand(
      "resolution-check", "pair the tau row with (x_i - 1) in F_p[M]");
  c_res->add_option("word", word_text)->required();
  c_res->add_option("--n", power_n)->required();
  c_res->add_option("--group", group_spec)->required();
  c_res->add_option("--images", images_text)->required();
  c_res->add_option("--prime", prime_p)->required();
  c_res->add_option("--rank", rank_arg);
  c_res->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    auto m = group_from_spec_or_file(group_spec);
    std::vector<int> images;
    std::stringstream ss(images_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) images.push_back(std::stoi(tok));
    if (static_cast<int>(images.size()) != w.rank())
      throw input_error("need one image per generator");
    report["holds"] = foxcalc::verify_resolution_shadow(
        w, int_of(power_n, "n"), images, m, int_of(prime_p, "prime"));
  });

  auto* c_group = app.add_subcommand("group", "build a finite group");
  c_group->add_option("spec", group_spec)->required();
  c_group->callback([&] {
    auto m = group_from_spec_or_file(group_spec);
    report = jsonio::group_json(*m);
    if (m->order() <= 48)
      report["subgroups"] = finquot::subgroup_lattice(*m).size();
    else
      report["subgroups"] = nullptr;
  });

  auto* c_measure = app.add_subcommand("measure", "word measure on a group");
  c_measure->add_option("word", word_text)->required();
  c_measure->add_option("--group", group_spec)->required();
  c_measure->add_option("--arity", arity_arg);
  c_measure->add_option("--rank", rank_arg);
  c_measure->callback([&] {
    Word w = parse_word_arg(word_text, static_cast<int>(rank_arg));
    auto m = group_from_spec_or_file(group_spec);
    report = jsonio::measure_json(
        w,
        finquot::word_measure(w, m, static_cast<int>(arity_arg), opt.budget));
  });

  auto* c_equiv = app.add_subcommand(
      "equiv", "compare word measures over a family of finite groups");
  c_equiv->add_option("word1", word_text)->required();
  c_equiv->add_option("word2", word2_text)->required();
  c_equiv->add_option("--family", family_spec)->required();
  c_equiv->add_option("--rank", rank_arg);
  c_equiv->callback([&] {
    int rank = static_cast<int>(rank_arg);
    Word w1 = parse_word_arg(word_text, rank);
    Word w2 = parse_word_arg(word2_text, rank);
    if (rank == 0) {
      rank = std::max(w1.rank(), w2.rank());
      w1 = wordcore::reduce(w1.letters(), rank);
      w2 = wordcore::reduce(w2.letters(), rank);
    }
    report = jsonio::equiv_json(finquot::profinite_equiv_test(
        w1, w2, parse_family(family_spec), opt.budget));
  });

  auto* c_homcount = app.add_subcommand("homcount", "count homomorphisms");
  c_homcount->add_option("relators", words_args);
  c_homcount->add_option("--gens", gens_arg)->required();
  c_homcount->add_option("--group", group_spec)->required();
  c_homcount->callback([&] {
    int gens = int_of(gens_arg, "generators");
    std::vector<Word> relators;
    for (const auto& t : words_args) relators.push_back(parse_word_arg(t, gens));
    auto m = group_from_spec_or_file(group_spec);
    report["count"] =
        finquot::count_homs(finquot::Presentation::make(gens, relators), *m,
                            opt.budget)
            .str();
  });

  auto* c_epicount = app.add_subcommand("epicount", "count epimorphisms");
  c_epicount->add_option("relators", words_args);
  c_epicount->add_option("--gens", gens_arg)->required();
  c_epicount->add_option("--group", group_spec)->required();
  c_epicount->callback([&] {
    int gens = int_of(gens_arg, "generators");
    std::vector<Word> relators;
    for (const auto& t : words_args) relators.push_back(parse_word_arg(t, gens));
    auto m = group_from_spec_or_file(group_spec);
    report["count"] =
        finquot::count_epis(finquot::Presentation::make(gens, relators), *m,
                            opt.budget)
            .str();
  });

  auto* c_bprime = app.add_subcommand(
      "bprime", "extension counts against |M|^(d-1) away from P");
  c_bprime->add_option("word", word_text)->required();
  c_bprime->add_option("--gens", gens_arg)->required();
  c_bprime->add_option("--primes", primes_text)->required();
  c_bprime->add_option("--family", family_spec)->required();
  c_bprime->callback([&] {
    int gens = int_of(gens_arg, "generators");
    Word a = parse_word_arg(word_text, gens);
    std::vector<long long> primes;
    std::stringstream ss(primes_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) primes.push_back(std::stoll(tok));
    report = jsonio::bprime_json(finquot::bprime_test(
        gens, a, primes, parse_family(family_spec), opt.budget));
  });

  auto* c_rigidity = app.add_subcommand(
      "rigidity", "orbit enumeration against measure separation");
  c_rigidity->add_option("--rank", rank_arg)->required();
  c_rigidity->add_option("--max-len", max_len)->required();
  c_rigidity->add_option("--family", family_spec)->required();
  c_rigidity->callback([&] {
    report = jsonio::rigidity_json(finquot::rigidity_experiment(
        int_of(rank_arg, "rank"), int_of(max_len, "max length"),
        parse_family(family_spec), opt.budget));
  });

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    emit(report, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return sc_budget_hit ? 3 : 0;
}
