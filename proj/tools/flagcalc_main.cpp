// flagcalc — exact Schubert calculus on flag varieties G/P.
//
// Subcommands: factor | constant | levi | verify | faces | dual.
// Output: single-line JSON records (default) or TSV; byte-deterministic.
// Exit codes: 0 ok, 2 validation error, 3 budget refusal, 4 internal
// invariant violation.  Every error is one line "error: ..." on stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <flagcalc/flagcalc.hpp>

namespace {

using namespace flagcalc;

long long resolve_budget(const std::optional<long long>& flag_value) {
  if (flag_value) {
    if (*flag_value <= 0) throw ValidationError("budget must be positive");
    return *flag_value;
  }
  if (const char* env = std::getenv("SCHUBERT_BUDGET")) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(env, &pos);
      if (pos != std::string(env).size() || v <= 0)
        throw ValidationError("");
      return v;
    } catch (const ValidationError&) {
      throw ValidationError(std::string("SCHUBERT_BUDGET is not a positive integer: '") + env +
                            "'");
    } catch (const std::exception&) {
      throw ValidationError(std::string("SCHUBERT_BUDGET is not a positive integer: '") + env +
                            "'");
    }
  }
  return 10000000;  // default: 10^7 enumerated tuples
}

void emit(const std::vector<ordered_json>& records, const std::string& format) {
  if (format == "tsv") {
    if (records.empty()) return;
    std::cout << tsv_header(records.front()) << "\n";
    for (const ordered_json& rec : records) std::cout << tsv_row(rec) << "\n";
  } else {
    for (const ordered_json& rec : records) std::cout << rec.dump() << "\n";
  }
}

std::vector<WeylElement> tuple_from_string(const FlagContext& ctx, const std::string& text) {
  std::vector<WeylElement> ws;
  for (const std::vector<int>& word : parse_tuple(text)) ws.push_back(ctx.weyl().from_word(word));
  return ws;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagcalc: exact Schubert calculus on flag varieties G/P"};
  app.require_subcommand(1);

  std::string group, p_str, q_str, tuple_str, word_str;
  std::string format = "json";
  int arity = 3;
  int max_codim = 1;
  bool sweep = false;
  std::optional<long long> budget_flag;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-g,--group", group, "group label, e.g. A2, B3, G2")->required();
    cmd->add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  CLI::App* factor = app.add_subcommand("factor", "split w in W^P as u.v through a chain P, Q");
  add_common(factor);
  factor->add_option("-P,--parabolic", p_str, "Delta(P), e.g. {} or {1,3}")->required();
  factor->add_option("-Q,--parabolic-q", q_str, "Delta(Q), must contain Delta(P)")->required();
  factor->add_option("-w,--word", word_str, "reduced word, e.g. \"1 2 1\" or e")->required();

  CLI::App* constant = app.add_subcommand("constant", "structure constant of a class tuple");
  add_common(constant);
  constant->add_option("-P,--parabolic", p_str, "Delta(P)")->required();
  constant->add_option("-t,--tuple", tuple_str, "tuple, e.g. \"1 2; 1 2; 2 1\"")->required();

  CLI::App* levi = app.add_subcommand("levi", "Levi-movability of a class tuple");
  add_common(levi);
  levi->add_option("-P,--parabolic", p_str, "Delta(P)")->required();
  levi->add_option("-t,--tuple", tuple_str, "tuple of class words")->required();
  CLI::Option* levi_q =
      levi->add_option("-Q,--parabolic-q", q_str, "optional chain: also analyze the u/v parts");

  CLI::App* verify = app.add_subcommand("verify", "check c_w = c_u * c_v on a tuple or by sweep");
  add_common(verify);
  CLI::Option* verify_p = verify->add_option("-P,--parabolic", p_str, "Delta(P)");
  CLI::Option* verify_q = verify->add_option("-Q,--parabolic-q", q_str, "Delta(Q)");
  CLI::Option* verify_t = verify->add_option("-t,--tuple", tuple_str, "tuple of class words");
  verify->add_flag("--sweep", sweep, "sweep all chains and admissible tuples");
  verify->add_option("-s,--arity", arity, "tuple arity for --sweep (default 3)");
  verify->add_option("--budget", budget_flag, "max enumerated tuples (default 10^7)");

  CLI::App* faces = app.add_subcommand("faces", "enumerate tensor-cone face descriptors");
  add_common(faces);
  faces->add_option("-s,--arity", arity, "tuple arity (default 3)");
  faces->add_option("--max-codim", max_codim, "max parabolic codimension (default 1)");
  faces->add_option("--budget", budget_flag, "max enumerated tuples (default 10^7)");

  CLI::App* dual = app.add_subcommand("dual", "Poincare-dual index of a class on G/P");
  add_common(dual);
  dual->add_option("-P,--parabolic", p_str, "Delta(P)")->required();
  dual->add_option("-w,--word", word_str, "reduced word in W^P")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    FlagContext ctx = FlagContext::from_label(group);
    const int rank = ctx.roots().rank();

    if (factor->parsed()) {
      const ParabolicSubset P = parse_parabolic(p_str, rank);
      const ParabolicSubset Q = parse_parabolic(q_str, rank);
      const WeylElement w = ctx.weyl().from_word(parse_word(word_str));
      const CosetFactorization f = ctx.weyl().factorize(w, P, Q);
      emit({factor_record(ctx, P, Q, f)}, format);
    } else if (constant->parsed()) {
      const ParabolicSubset P = parse_parabolic(p_str, rank);
      const std::vector<WeylElement> ws = tuple_from_string(ctx, tuple_str);
      const BigInt c = ctx.top_constant(ws, P);
      emit({constant_record(ctx, P, ws, c)}, format);
    } else if (levi->parsed()) {
      const ParabolicSubset P = parse_parabolic(p_str, rank);
      const std::vector<WeylElement> ws = tuple_from_string(ctx, tuple_str);
      if (levi_q->count() > 0) {
        const ParabolicSubset Q = parse_parabolic(q_str, rank);
        const LeviFromPartsResult r = levi_from_parts(ctx, ws, P, Q);
        emit({levi_descent_record(ctx, P, Q, ws, r.report)}, format);
      } else {
        const LeviReport r = is_levi_movable(ctx, ws, P);
        emit({levi_record(ctx, P, ws, r)}, format);
      }
    } else if (verify->parsed()) {
      if (sweep && verify_t->count() > 0)
        throw ValidationError("--sweep and --tuple are mutually exclusive");
      if (sweep) {
        std::optional<ParabolicSubset> only_p, only_q;
        if (verify_p->count() > 0) only_p = parse_parabolic(p_str, rank);
        if (verify_q->count() > 0) only_q = parse_parabolic(q_str, rank);
        const BigInt budget(resolve_budget(budget_flag));
        const SweepResult res = run_verification_sweep(ctx, arity, budget, only_p, only_q);
        std::vector<ordered_json> records;
        for (const ChainStats& st : res.chains)
          records.push_back(sweep_chain_record(ctx, arity, st));
        emit(records, format);
        std::cout << "checked " << res.total_tuples << " tuples, " << res.total_violations
                  << " violations\n";
      } else {
        if (verify_p->count() == 0 || verify_q->count() == 0 || verify_t->count() == 0)
          throw ValidationError("verify needs either --sweep or all of -P, -Q, -t");
        const ParabolicSubset P = parse_parabolic(p_str, rank);
        const ParabolicSubset Q = parse_parabolic(q_str, rank);
        const std::vector<WeylElement> ws = tuple_from_string(ctx, tuple_str);
        const ProductFormulaReport report = ctx.verify_product_formula(ws, P, Q);
        emit({verify_record(ctx, P, Q, ws, report)}, format);
      }
    } else if (faces->parsed()) {
      const BigInt budget(resolve_budget(budget_flag));
      const std::vector<FaceDescriptor> descriptors =
          enumerate_faces(ctx, arity, max_codim, budget);
      std::vector<ordered_json> records;
      for (const FaceDescriptor& d : descriptors) records.push_back(face_record(d));
      emit(records, format);
    } else if (dual->parsed()) {
      const ParabolicSubset P = parse_parabolic(p_str, rank);
      const WeylElement w = ctx.weyl().from_word(parse_word(word_str));
      const WeylElement d = ctx.weyl().dual_index(w, P);
      emit({dual_record(ctx, P, w, d)}, format);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
