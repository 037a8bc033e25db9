#include "tdeg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tdeg/error.hpp"
#include "tdeg/fst_build.hpp"

namespace tdeg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + path);
  f << text;
}

// Inline JSON, or @path to read it from a file.
Json json_arg(const std::string& arg) { return parse_json(!arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg); }

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

std::string describe(const VerifyResult& r) {
  if (r.ok) return std::to_string(r.compared_bits) + " bits match";
  std::string s = "mismatch at bit " + std::to_string(r.mismatch.value_or(r.compared_bits));
  if (r.output_exhausted) s += " (output ran short)";
  return s;
}

void replay_claim(const TransductionClaim& claim, std::uint64_t blocks, VerifyReport& rep) {
  const std::string name = claim.note.empty() ? to_string(claim.source) + " >= " + to_string(claim.target) : claim.note;
  try {
    auto run = certify_stream(claim, blocks);
    rep.lines.push_back(std::string(run.result.ok ? "ok" : "FAIL") + "  " + name + ": " + describe(run.result));
    rep.ok = rep.ok && run.result.ok;
  } catch (const Error& e) {
    rep.lines.push_back("FAIL  " + name + ": " + e.what());
    rep.ok = false;
  }
}

void replay_claims(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  auto it = doc.find("claims");
  if (it == doc.end()) return;
  if (!it->is_array()) throw Error(ErrorKind::Schema, "'claims' must be an array");
  for (const Json& c : *it) replay_claim(decode_claim(c), blocks, rep);
}

void check(bool cond, const std::string& what, VerifyReport& rep) {
  rep.lines.push_back(std::string(cond ? "ok" : "FAIL") + "  " + what);
  rep.ok = rep.ok && cond;
}

std::string kind_of(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
    throw Error(ErrorKind::Schema, "certificate needs a string 'kind'");
  return doc.at("kind").get<std::string>();
}

long long_field(const Json& doc, const char* name) {
  if (!doc.contains(name) || !doc.at(name).is_number_integer()) throw Error(ErrorKind::Schema, std::string("missing integer '") + name + "'");
  return doc.at(name).get<long>();
}

std::string string_field(const Json& doc, const char* name) {
  if (!doc.contains(name) || !doc.at(name).is_string()) throw Error(ErrorKind::Schema, std::string("missing string '") + name + "'");
  return doc.at(name).get<std::string>();
}

void verify_transduction_doc(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  const TransductionClaim claim = decode_claim(doc.at("claim"));
  check(claim_holds(claim), "claim identity", rep);
  const StreamSpec source = decode_stream(doc.at("source"));
  const StreamSpec target = decode_stream(doc.at("target"));
  const Integer ss = parse_integer(string_field(doc, "source_scale"));
  const Integer ts = parse_integer(string_field(doc, "target_scale"));
  check(ss > 0 && ts > 0 && source.poly == claim.source * Rat(ss) && target.poly == claim.target * Rat(ts) &&
            source.start == 0 && target.start == 0,
        "streams are positive multiples of the claim's polynomials", rep);
  std::vector<Fst> stages;
  for (const Json& f : doc.at("stages")) stages.push_back(decode_fst(f));
  if (stages.empty()) throw Error(ErrorKind::Schema, "no stages");
  const std::uint64_t cap = Weight(decode_weight(doc.at("machine_weight"))).samples() * (blocks + 1) + claim.skip + 1;
  VerifyResult r;
  if (doc.contains("fst") && !doc.at("fst").is_null()) {
    r = verify_transduction(decode_fst(doc.at("fst")), source, target, blocks, cap);
  } else {
    std::vector<const Fst*> ms;
    for (const Fst& f : stages) ms.push_back(&f);
    r = verify_chain(ms, source, target, blocks, cap);
  }
  check(r.ok, "replay: " + describe(r), rep);
}

void verify_reduce2_doc(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  const Rat a = decode_rat(doc.at("a"));
  const Rat b = decode_rat(doc.at("b"));
  const auto fresh = reduce_2transform(a, b, long_field(doc, "p"), long_field(doc, "r"), long_field(doc, "s"));
  check(fresh.k == long_field(doc, "k") && fresh.a1 == decode_rat(doc.at("a1")) && fresh.a2 == decode_rat(doc.at("a2")) &&
            fresh.a3 == decode_rat(doc.at("a3")) && fresh.constant_delta == decode_rat(doc.at("constant_delta")),
        "coefficients recomputed", rep);
  const TransductionClaim claim = decode_claim(doc.at("claim"));
  check(claim == fresh.claim(), "claim matches the recomputed reduction", rep);
  replay_claim(claim, blocks, rep);
}

void verify_canon_doc(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  const auto fresh = canonicalize_1transform(parse_integer(string_field(doc, "a")), parse_integer(string_field(doc, "b")));
  check(fresh.canonical == parse_integer(string_field(doc, "canonical")),
        "canonical modulus " + fresh.canonical.get_str() + " recomputed", rep);
  replay_claims(doc, blocks, rep);
}

void verify_classification_doc(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  const Weight w = decode_weight(doc.at("weight"));
  std::optional<Poly> q;
  if (doc.contains("bottom")) q = decode_poly(doc.at("bottom").at("q_eps"));
  const auto fresh = classify(w, long_field(doc, "shift"), q);
  check(to_string(fresh.degree) == string_field(doc, "degree"), "degree " + to_string(fresh.degree) + " recomputed", rep);
  replay_claims(doc, blocks, rep);
}

void verify_comparison_doc(const Json& doc, std::uint64_t blocks, VerifyReport& rep) {
  const auto x = parse_degree(string_field(doc, "left"));
  const auto y = parse_degree(string_field(doc, "right"));
  const Order o = compare(x, y);
  check(std::string(to_string(o)) == string_field(doc, "order"), "order " + std::string(to_string(o)) + " recomputed", rep);
  if (doc.contains("claim") && !doc.at("claim").is_null()) replay_claim(decode_claim(doc.at("claim")), blocks, rep);
}

Json comparison_json(const CanonicalDegree& x, const CanonicalDegree& y) {
  const Order o = compare(x, y);
  Json j{{"kind", "comparison"}, {"left", to_string(x)}, {"right", to_string(y)}, {"order", std::string(to_string(o))}};
  auto claim = order_claim(x, y);
  if (!claim && o == Order::below) claim = order_claim(y, x);
  j["claim"] = claim ? encode(*claim) : Json(nullptr);
  return j;
}

void print_classification(const Classification& c, std::ostream& out) {
  out << to_string(c.degree) << "\n";
  out << "product: " << to_string(c.product) << "\n";
  for (const auto& step : c.chain) out << "  " << step << "\n";
  for (const auto& note : c.omitted) out << "  omitted: " << note << "\n";
}

struct Args {
  std::string poly, weight, fst, bits, first, second, outfile, cert, left, right, expect, format = "dot", offset = "auto";
  std::string a, b, q_eps, claim;
  std::uint64_t blocks = 30, skip = 0, max = 12;
  long shift = 0, p = 0, r = 0, s = 0;
  bool use_stdin = false;
  bool bits_given = false;
};

int run(CLI::App& app, const Args& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string cmd = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();

  if (cmd == "stream") {
    StreamSpec s;
    s.poly = decode_poly(json_arg(o.poly));
    s.offset = o.offset == "auto" ? nonneg_offset(s.poly) : parse_integer(o.offset);
    if (o.offset == "auto") err << "offset " << s.offset.get_str() << " added to every block\n";
    out << stream_prefix(s, o.blocks) << "\n";
    return kExitOk;
  }
  if (cmd == "fst-run") {
    const Fst f = decode_fst(parse_json(read_file(o.fst)));
    if (!o.bits_given && !o.use_stdin) throw Error(ErrorKind::Parse, "fst-run needs --bits or --stdin");
    std::string bits = o.bits;
    if (o.use_stdin) {
      std::ostringstream ss;
      ss << in.rdbuf();
      bits.clear();
      for (char ch : ss.str())
        if (!std::isspace(static_cast<unsigned char>(ch))) bits += ch;
    }
    if (!is_bitword(bits)) throw Error(ErrorKind::Parse, "input must consist of 0 and 1");
    out << fst_run(f, bits) << "\n";
    return kExitOk;
  }
  if (cmd == "fst-compose") {
    const Fst f = decode_fst(parse_json(read_file(o.first)));
    const Fst g = decode_fst(parse_json(read_file(o.second)));
    const Fst h = fst_compose(f, g);
    write_file(o.outfile, pretty(encode(h)));
    out << h.size() << " states\n";
    return kExitOk;
  }
  if (cmd == "fst-from-weight") {
    const Fst f = fst_from_weight(decode_weight(json_arg(o.weight)), o.skip);
    write_file(o.outfile, pretty(encode(f)));
    out << f.size() << " states\n";
    return kExitOk;
  }
  if (cmd == "apply-weight") {
    const Json w = json_arg(o.weight);
    const Poly f = decode_poly(json_arg(o.poly));
    if (w.contains("weights")) {
      auto res = tuple_product_poly(decode_tuple(w), f);
      if (auto* g = std::get_if<Poly>(&res)) {
        out << to_string(*g) << "\n";
      } else {
        const auto& residues = std::get<NotPolynomial>(res).residues;
        out << "not a polynomial; residue classes mod " << residues.size() << ":\n";
        for (std::size_t r = 0; r < residues.size(); ++r) out << "  n = " << residues.size() << "q+" << r << ": " << to_string(residues[r]) << "\n";
      }
    } else {
      out << to_string(single_product_poly(decode_weight(w), f)) << "\n";
    }
    return kExitOk;
  }
  if (cmd == "classify") {
    const Json w = json_arg(o.weight);
    std::optional<Poly> q;
    if (!o.q_eps.empty()) q = decode_poly(json_arg(o.q_eps));
    std::optional<Classification> c;
    if (w.contains("weights")) {
      if (o.shift != 0) throw Error(ErrorKind::InvalidParam, "tuples are classified over n^3 only (shift 0)");
      std::string why;
      c = classify_tuple(decode_tuple(w), &why);
      if (!c) throw Error(ErrorKind::InvalidParam, why);
    } else {
      c = classify(decode_weight(w), o.shift, q);
    }
    print_classification(*c, out);
    if (!o.cert.empty()) write_file(o.cert, pretty(encode(*c)));
    return kExitOk;
  }
  if (cmd == "compare") {
    const auto x = parse_degree(o.left);
    const auto y = parse_degree(o.right);
    const Order ord = compare(x, y);
    out << to_string(ord) << "\n";
    if (!o.cert.empty()) write_file(o.cert, pretty(comparison_json(x, y)));
    if (!o.expect.empty()) {
      if (o.expect != "above" && o.expect != "below" && o.expect != "equivalent" && o.expect != "incomparable")
        throw Error(ErrorKind::Parse, "--expect takes above, below, equivalent or incomparable");
      return o.expect == to_string(ord) ? kExitOk : kExitMismatch;
    }
    return kExitOk;
  }
  if (cmd == "reduce2") {
    const auto c = reduce_2transform(parse_rat(o.a), parse_rat(o.b), o.p, o.r, o.s);
    const std::string text = pretty(encode(c));
    out << text;
    if (!o.cert.empty()) write_file(o.cert, text);
    return kExitOk;
  }
  if (cmd == "canonicalize") {
    const auto c = canonicalize_1transform(parse_integer(o.a), parse_integer(o.b));
    out << c.canonical.get_str() << "\n";
    for (const auto& step : c.cert.chain) out << "  " << step << "\n";
    if (!o.cert.empty()) write_file(o.cert, pretty(encode(c.cert)));
    return kExitOk;
  }
  if (cmd == "lattice") {
    const auto l = divisor_lattice(o.max);
    if (o.format == "dot")
      out << to_dot(l);
    else if (o.format == "json")
      out << pretty(encode(l));
    else
      throw Error(ErrorKind::Parse, "--format takes dot or json");
    return kExitOk;
  }
  if (cmd == "certify") {
    auto run = certify_stream(decode_claim(json_arg(o.claim)), o.blocks);
    out << describe(run.result) << "\n";
    if (!o.cert.empty()) write_file(o.cert, pretty(encode(run.certificate)));
    return run.result.ok ? kExitOk : kExitMismatch;
  }
  if (cmd == "verify") {
    const auto rep = verify_document(parse_json(read_file(o.cert)), o.blocks);
    for (const auto& line : rep.lines) out << line << "\n";
    out << (rep.ok ? "verified" : "NOT verified") << "\n";
    return rep.ok ? kExitOk : kExitMismatch;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace

VerifyReport verify_document(const Json& doc, std::uint64_t blocks) {
  VerifyReport rep;
  const std::string kind = kind_of(doc);
  try {
    if (kind == "transduction")
      verify_transduction_doc(doc, blocks, rep);
    else if (kind == "reduce2")
      verify_reduce2_doc(doc, blocks, rep);
    else if (kind == "canon")
      verify_canon_doc(doc, blocks, rep);
    else if (kind == "classification")
      verify_classification_doc(doc, blocks, rep);
    else if (kind == "comparison")
      verify_comparison_doc(doc, blocks, rep);
    else
      throw Error(ErrorKind::Schema, "unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, e.what());
  }
  return rep;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"transducer degrees of polynomial streams", "tdeg"};
  app.require_subcommand(1);
  Args o;

  auto* stream = app.add_subcommand("stream", "print a prefix of the stream of a polynomial");
  stream->add_option("--poly", o.poly, "polynomial JSON {\"coeffs\":[...]}")->required();
  stream->add_option("--blocks", o.blocks, "number of blocks")->required();
  stream->add_option("--offset", o.offset, "added to every block: an integer or auto");

  auto* fst_run_cmd = app.add_subcommand("fst-run", "run a transducer on a bit string");
  fst_run_cmd->add_option("--fst", o.fst, "transducer JSON file")->required();
  auto* bits = fst_run_cmd->add_option("--bits", o.bits, "input bits");
  auto* from_stdin = fst_run_cmd->add_flag("--stdin", o.use_stdin, "read input bits from standard input");
  bits->excludes(from_stdin);

  auto* compose = app.add_subcommand("fst-compose", "compose two transducers, first then second");
  compose->add_option("--first", o.first)->required();
  compose->add_option("--second", o.second)->required();
  compose->add_option("--out", o.outfile)->required();

  auto* from_weight = app.add_subcommand("fst-from-weight", "transducer realizing a natural weight");
  from_weight->add_option("--weight", o.weight, "weight JSON")->required();
  from_weight->add_option("--skip", o.skip, "source blocks dropped first");
  from_weight->add_option("--out", o.outfile)->required();

  auto* apply = app.add_subcommand("apply-weight", "print the weight product of a polynomial");
  apply->add_option("--weight", o.weight, "weight or tuple JSON")->required();
  apply->add_option("--poly", o.poly, "polynomial JSON")->required();

  auto* cls = app.add_subcommand("classify", "degree of weight (x) (n+shift)^3");
  cls->add_option("--weight", o.weight, "weight or tuple JSON")->required();
  cls->add_option("--shift", o.shift);
  cls->add_option("--q-eps", o.q_eps, "perturbation cubic n^3 + b2 n^2 + b1 n as polynomial JSON");
  cls->add_option("--certificate", o.cert, "write the classification certificate here");

  auto* cmp = app.add_subcommand("compare", "order of two degrees (one:N, N, bottom, zero)");
  cmp->add_option("--left", o.left)->required();
  cmp->add_option("--right", o.right)->required();
  cmp->add_option("--expect", o.expect, "exit 1 unless the order is this one");
  cmp->add_option("--certificate", o.cert, "write the comparison certificate here");

  auto* red = app.add_subcommand("reduce2", "rewrite a(pn+r)^3 + b(pn+s)^3 as a 3-transform");
  red->add_option("--a", o.a)->required();
  red->add_option("--b", o.b)->required();
  red->add_option("--p", o.p)->required();
  red->add_option("--r", o.r)->required();
  red->add_option("--s", o.s)->required();
  red->add_option("--certificate", o.cert, "also write the certificate here");

  auto* canon = app.add_subcommand("canonicalize", "canonical modulus of (an+b)^3");
  canon->add_option("--a", o.a)->required();
  canon->add_option("--b", o.b)->required();
  canon->add_option("--certificate", o.cert, "write the canonicalization certificate here");

  auto* lat = app.add_subcommand("lattice", "export the divisibility lattice of OneT degrees");
  lat->add_option("--max", o.max)->required()->check(CLI::PositiveNumber);
  lat->add_option("--format", o.format, "dot or json");

  auto* cert = app.add_subcommand("certify", "compile a transduction claim and replay it");
  cert->add_option("--claim", o.claim, "claim JSON")->required();
  cert->add_option("--blocks", o.blocks);
  cert->add_option("--out", o.cert, "write the transduction certificate here");

  auto* ver = app.add_subcommand("verify", "check and replay a certificate");
  ver->add_option("--certificate", o.cert)->required();
  ver->add_option("--blocks", o.blocks);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }
  o.bits_given = bits->count() > 0;

  try {
    return run(app, o, in, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace tdeg
