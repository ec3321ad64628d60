#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "numbase/base_file.hpp"
#include "numbase/codec.hpp"
#include "numbase/digit_text.hpp"
#include "numbase/error.hpp"
#include "numbase/mixed_radix.hpp"

namespace numbase::cli {

namespace {

std::uint64_t parse_u64_param(std::string_view text, std::string_view what) {
  const Natural n = Natural::from_decimal(text);
  const auto v = n.to_u64();
  if (!v) throw Error(Errc::InvalidParameter, std::string(what) + " is too large");
  return *v;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IndexBeyondCapacity: return kCapacity;
    case Errc::Underflow:
    case Errc::DivisionByZero: return kArithmetic;
    default: return kInvalidInput;
  }
}

struct Options {
  std::string base;
  std::string sep;
  bool compact = false;
  bool trace = false;
  bool value = false;
  bool csv = false;
  std::string from = "0";
  std::string to;
  std::string upto = "10000";
  unsigned threads = 0;
  std::vector<std::string> operands;
};

char separator_of(const Options& o) {
  if (o.sep.empty()) return '.';
  if (o.sep.size() != 1) throw Error(Errc::InvalidParameter, "--sep takes a single character");
  return o.sep.front();
}

RenderFormat output_format(const Options& o) {
  if (o.compact) return RenderFormat::compact();
  if (!o.sep.empty()) return RenderFormat::delimited(separator_of(o));
  return RenderFormat::automatic();
}

RenderFormat input_format(const Options& o) { return RenderFormat::automatic(separator_of(o)); }

Representation operand(const BaseSequence& base, const Options& o, const std::string& text) {
  if (o.value) return encode_greedy(base, Natural::from_decimal(text));
  Representation r = parse(base, text, input_format(o));
  if (!is_canonical(r)) {
    throw Error(Errc::NotCanonical, "'" + text + "' is not canonical in " + base.describe());
  }
  return r;
}

void print_trace(std::ostream& err, const std::string& op, const ArithTrace& t) {
  err << "trace: path "
      << (t.path == ArithPath::DigitWise ? "digit-wise" : "decode-fallback") << '\n';
  if (t.steps.empty()) return;
  if (op == "sub") {
    err << "trace: ";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      if (i) err << " -> ";
      err << t.steps[i];
    }
    err << '\n';
  } else {
    for (const auto& s : t.steps) err << "trace: " << s << '\n';
  }
}

int run_command(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  const BaseSequence base = parse_base_spec(o.base);

  if (cmd == "encode") {
    out << render(encode_greedy(base, Natural::from_decimal(o.operands.at(0))), output_format(o))
        << '\n';
    return kOk;
  }
  if (cmd == "decode") {
    out << decode(parse(base, o.operands.at(0), input_format(o))) << '\n';
    return kOk;
  }
  if (cmd == "add" || cmd == "sub" || cmd == "mul" || cmd == "divrem") {
    const Representation x = operand(base, o, o.operands.at(0));
    const Representation y = operand(base, o, o.operands.at(1));
    const RenderFormat fmt = output_format(o);
    ArithTrace trace;
    ArithTrace* tp = o.trace ? &trace : nullptr;
    if (cmd == "divrem") {
      auto [q, r] = divrem(base, x, y);
      out << render(q, fmt) << ' ' << render(r, fmt) << '\n';
      return kOk;
    }
    Representation result = cmd == "add"   ? add(base, x, y, tp)
                             : cmd == "sub" ? sub(base, x, y, tp)
                                            : mul(base, x, y);
    if (tp && cmd != "mul") print_trace(err, cmd, trace);
    out << render(result, fmt) << '\n';
    return kOk;
  }
  if (cmd == "table") {
    const RenderFormat fmt = output_format(o);
    if (o.csv && fmt.mode != RenderFormat::Mode::Compact && fmt.separator == ',') {
      throw Error(Errc::InvalidParameter, "separator ',' cannot be used with --csv");
    }
    const Natural lo = Natural::from_decimal(o.from);
    const Natural hi = Natural::from_decimal(o.to);
    if (hi < lo) throw Error(Errc::InvalidParameter, "--to is below --from");
    for (Natural v = lo; v <= hi; ++v) {
      if (o.csv) out << v << ',';
      out << render(encode_greedy(base, v), fmt) << '\n';
    }
    return kOk;
  }
  if (cmd == "verify") {
    const Natural lo = Natural::from_decimal(o.from);
    const Natural hi = Natural::from_decimal(o.upto);
    const unsigned workers =
        o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    const VerificationReport r = verify_range(base, lo, hi, workers);
    out << (r.passed() ? "PASS" : "FAIL") << " base=" << base.describe() << " range=[" << r.lo
        << ',' << r.hi << "] checked=" << r.checked
        << " roundtrip_failures=" << r.roundtrip_failures
        << " bound_violations=" << r.bound_violations
        << " canonicity_violations=" << r.canonicity_violations;
    if (r.first_failure) out << " first_failure=" << *r.first_failure;
    out << '\n';
    return r.passed() ? kOk : kVerifyFailed;
  }
  throw Error(Errc::InvalidParameter, "unknown command '" + cmd + "'");
}

}  // namespace

BaseSequence parse_base_spec(std::string_view spec) {
  if (spec == "prime") return BaseSequence::prime();
  if (spec == "square") return BaseSequence::square();
  if (spec == "factorial") return BaseSequence::factorial();
  if (spec == "fibonacci") return BaseSequence::fibonacci();
  if (spec == "lucas") return BaseSequence::lucas();
  if (spec.starts_with("mpower:")) {
    return make_builtin(BaseKind::MPower, parse_u64_param(spec.substr(7), "m"));
  }
  if (spec.starts_with("power:")) {
    return BaseSequence::power_of(Natural::from_decimal(spec.substr(6)));
  }
  if (spec.starts_with("file:") && spec.size() > 5) {
    return load_base_file(std::string(spec.substr(5)));
  }
  throw Error(Errc::InvalidParameter,
              "unknown base '" + std::string(spec) +
                  "' (expected prime, square, mpower:<m>, factorial, power:<p>, fibonacci, "
                  "lucas or file:<path>)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy representations of naturals over generalized numeration bases", "numbase"};
  app.require_subcommand(1);
  Options o;

  auto with_base = [&](CLI::App* sub) {
    sub->add_option("--base,-b", o.base,
                    "prime|square|mpower:<m>|factorial|power:<p>|fibonacci|lucas|file:<path>")
        ->required();
  };
  auto with_format = [&](CLI::App* sub) {
    auto* sep = sub->add_option("--sep", o.sep, "Digit separator; forces delimited output");
    sub->add_flag("--compact", o.compact, "Force concatenated single-character digits")
        ->excludes(sep);
  };

  auto* encode = app.add_subcommand("encode", "Write a decimal natural in the base");
  with_base(encode);
  with_format(encode);
  encode->add_option("value", o.operands, "Decimal natural")->required()->expected(1);

  auto* decode_cmd = app.add_subcommand("decode", "Value of a digit string");
  with_base(decode_cmd);
  decode_cmd->add_option("--sep", o.sep, "Digit separator of the input");
  decode_cmd->add_option("digits", o.operands, "Digit string")->required()->expected(1);

  for (const char* name : {"add", "sub", "mul", "divrem"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " two numbers written in the base");
    with_base(sub);
    with_format(sub);
    sub->add_flag("--value", o.value, "Operands are decimal values instead of digit strings");
    if (std::string_view(name) == "add" || std::string_view(name) == "sub") {
      sub->add_flag("--trace", o.trace, "Print carry/borrow states to stderr");
    }
    sub->add_option("operands", o.operands, "x y")->required()->expected(2);
  }

  auto* table_cmd = app.add_subcommand("table", "One representation per line");
  with_base(table_cmd);
  with_format(table_cmd);
  table_cmd->add_option("--from", o.from, "First value")->required();
  table_cmd->add_option("--to", o.to, "Last value")->required();
  table_cmd->add_flag("--csv", o.csv, "Print n,representation");

  auto* verify = app.add_subcommand("verify", "Check round trip, bounds and canonicity on a range");
  with_base(verify);
  verify->add_option("--from", o.from, "First value (default 0)");
  verify->add_option("--upto", o.upto, "Last value (default 10000)");
  verify->add_option("--threads", o.threads, "Worker threads (default: hardware)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run_command(cmd, o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace numbase::cli
