// semigreen - Green's relations and linear preservers for matrix monoids
// over anti-negative semifields.

#include "semigreen/cli.hpp"

#include <cstdint>   // for uint64_t
#include <optional>  // for optional

#include "CLI11.hpp"

#include "semigreen/error.hpp"
#include "semigreen/green.hpp"
#include "semigreen/io.hpp"
#include "semigreen/linear_map.hpp"
#include "semigreen/verify.hpp"

namespace semigreen {

  namespace {
    struct RelateArgs {
      std::string rel;
      bool        witness = false;
      std::string a;
      std::string b;
    };

    struct VerifyArgs {
      std::string             suite;
      std::string             semifield = "boolean";
      size_t                  n         = 2;
      std::string             mode;
      std::optional<uint64_t> seed;
      size_t                  trials = 1000;
      std::optional<size_t>   maps;
      std::string             strength = "strong";
      size_t                  workers  = 0;
      std::string             format   = "json";
    };

    struct EggBoxArgs {
      size_t      n      = 2;
      std::string format = "json";
    };

    void emit(std::ostream& out, json const& j) {
      out << j.dump(2) << "\n";
    }

    int relate_command(RelateArgs const& a, std::ostream& out) {
      Relation rel = relation_from_string(a.rel);
      Matrix   x   = matrix_from_json(read_json_file(a.a));
      Matrix   y   = matrix_from_json(read_json_file(a.b));
      if (a.witness) {
        emit(out, to_json(relate_with_witness(x, y, rel)));
      } else {
        emit(out, to_json(RelateResult{relate(x, y, rel), std::nullopt}));
      }
      return 0;
    }

    int verify_command(VerifyArgs const& a, std::ostream& out) {
      SuiteParams p;
      p.semifield = semifield_from_string(a.semifield);
      p.n         = a.n;
      if (a.mode.empty()) {
        p.mode = a.seed ? Mode::randomized : Mode::exhaustive;
      } else {
        p.mode = mode_from_string(a.mode);
      }
      p.seed     = a.seed;
      p.trials   = a.trials;
      p.maps     = a.maps;
      p.strength = a.strength == "weak" ? Strength::weak : Strength::strong;
      p.workers  = a.workers;
      SuiteReport r = run_suite(a.suite, p);
      out << format_report(
          r, a.format == "text" ? ReportStyle::text : ReportStyle::json);
      return r.pass ? 0 : 1;
    }

    int eggbox_command(EggBoxArgs const& a, std::ostream& out) {
      EggBox e = eggbox(a.n);
      if (a.format == "dot") {
        out << to_dot(e);
      } else {
        emit(out, to_json(e));
      }
      return 0;
    }
  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    CLI::App app{"Green's relations and linear preservers for matrix monoids",
                 "semigreen"};
    app.require_subcommand(1);

    RelateArgs relate_args;
    auto*      relate_cmd = app.add_subcommand("relate", "decide a relation");
    relate_cmd->add_option("--rel", relate_args.rel, "relation")
        ->required()
        ->check(CLI::IsMember({"L", "R", "H", "D", "J", "leqL", "leqR", "leqJ"}));
    relate_cmd->add_flag("--witness", relate_args.witness, "emit multipliers");
    relate_cmd->add_option("a", relate_args.a, "matrix file")->required();
    relate_cmd->add_option("b", relate_args.b, "matrix file")->required();

    std::string rank_file;
    auto* rank_cmd = app.add_subcommand("rank", "factor rank of a matrix");
    rank_cmd->add_option("a", rank_file, "matrix file")->required();

    std::string classify_file;
    auto*       classify_cmd
        = app.add_subcommand("classify", "canonical form of a linear map");
    classify_cmd->add_option("map", classify_file, "linear map file")
        ->required();

    VerifyArgs verify_args;
    auto*      verify_cmd = app.add_subcommand("verify", "run a suite");
    verify_cmd->add_option("--suite", verify_args.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--semifield", verify_args.semifield)
        ->check(CLI::IsMember({"boolean", "tropical", "tropical_int"}));
    verify_cmd->add_option("--n", verify_args.n)->check(CLI::PositiveNumber);
    verify_cmd
        ->add_option("--mode",
                     verify_args.mode,
                     "randomized when --seed is given, else exhaustive")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    verify_cmd->add_option("--seed", verify_args.seed);
    verify_cmd->add_option("--trials", verify_args.trials)
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--maps", verify_args.maps)
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--strength", verify_args.strength)
        ->check(CLI::IsMember({"weak", "strong"}));
    verify_cmd->add_option("--workers", verify_args.workers, "0 for all cores");
    verify_cmd->add_option("--format", verify_args.format)
        ->check(CLI::IsMember({"json", "text"}));

    EggBoxArgs eggbox_args;
    auto*      eggbox_cmd = app.add_subcommand("eggbox", "egg-box of M_n(B)");
    eggbox_cmd->add_option("--n", eggbox_args.n)->required();
    eggbox_cmd->add_option("--format", eggbox_args.format)
        ->check(CLI::IsMember({"dot", "json"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, err, err);
      return 2;
    }

    try {
      if (*relate_cmd) {
        return relate_command(relate_args, out);
      }
      if (*rank_cmd) {
        emit(out, to_json(try_factor_rank(matrix_from_json(read_json_file(rank_file)))));
        return 0;
      }
      if (*classify_cmd) {
        emit(out, to_json(classify(linear_map_from_json(read_json_file(classify_file)))));
        return 0;
      }
      if (*verify_cmd) {
        return verify_command(verify_args, out);
      }
      return eggbox_command(eggbox_args, out);
    } catch (Error const& e) {
      err << "semigreen: " << e.what() << "\n";
      return 2;
    }
  }

}  // namespace semigreen
