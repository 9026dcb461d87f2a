#include "affsemi/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "affsemi/error.hpp"
#include "affsemi/fsing.hpp"
#include "affsemi/io.hpp"
#include "affsemi/polyhedral.hpp"
#include "affsemi/semigroup.hpp"
#include "json.hpp"

namespace affsemi {

namespace {

using nlohmann::json;

json to_json(const Int& x) { return x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()); }

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const IntVec& v : vs) a.push_back(to_json(v));
  return a;
}

std::string spaced(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}


Int parse_integer_arg(const std::string& text, const char* what) {
  Int x;
  if (text.empty() || x.set_str(text, 10) != 0)
    throw ParseError(std::string(what) + " must be an integer, got '" + text + "'");
  return x;
}

IntVec parse_vector_arg(const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_integer_arg(item, "-v entry"));
  if (v.empty()) throw ParseError("-v needs a comma-separated vector");
  return v;
}

bool verbose() {
  const char* v = std::getenv("AFFSEMI_VERBOSE");
  return v && *v && std::string(v) != "0";
}

struct Options {
  std::string format = "text";
  std::string normalization_path;
  std::string file;
  std::string m;
  std::string p;
  std::string vector;
  std::string ideal_path;
  std::string degree_bound;
};

class Driver {
 public:
  Driver(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {}

  bool as_json() const { return opts_.format == "json"; }

  AffineSemigroup semigroup() {
    if (!A_) A_ = load_semigroup(opts_.file, err_);
    return *A_;
  }

  // Computed normalization, checked against --normalization when given.
  AffineSemigroup normalization_checked() {
    if (Abar_) return *Abar_;
    AffineSemigroup A = semigroup();
    AffineSemigroup computed = normalization(A);
    if (!opts_.normalization_path.empty()) {
      AffineSemigroup supplied = load_semigroup(opts_.normalization_path, err_);
      if (supplied.ambient_dim() != A.ambient_dim() || !same_monoid(supplied, computed))
        throw VerificationError("supplied normalization does not match the computed one (" +
                                std::to_string(computed.size()) + " generators)");
    }
    log("normalization: " + std::to_string(computed.size()) + " generators");
    Abar_ = computed;
    return computed;
  }

  Int prime() const { return parse_integer_arg(opts_.p, "-p"); }

  void log(const std::string& msg) const {
    if (verbose()) err_ << "[affsemi] " << msg << '\n';
  }

  void emit_generators(const std::vector<IntVec>& gens) {
    if (as_json()) {
      out_ << json{{"generators", to_json(gens)}}.dump() << '\n';
    } else {
      for (const IntVec& g : gens) out_ << spaced(g) << '\n';
    }
  }

  void normalize() { emit_generators(normalization_checked().generators()); }

  void quotient() {
    Int m = parse_integer_arg(opts_.m, "-m");
    if (m < 1) throw PreconditionError("-m must be positive");
    emit_generators(quotient_in_group(semigroup(), normalization_checked(), m).generators());
  }

  void weak() {
    Int p = prime();
    if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
    WkpResult r = wkp(semigroup(), normalization_checked(), p);
    if (as_json()) {
      out_ << json{{"generators", to_json(r.semigroup.generators())}, {"n0", r.n0}}.dump() << '\n';
    } else {
      for (const IntVec& g : r.semigroup.generators()) out_ << spaced(g) << '\n';
      out_ << "n0 " << r.n0 << '\n';
    }
  }

  void seminormalize() {
    emit_generators(seminormalization(semigroup(), normalization_checked()).generators());
  }

  void member() {
    AffineSemigroup A = semigroup();
    if (!opts_.normalization_path.empty()) normalization_checked();
    IntVec v = parse_vector_arg(opts_.vector);
    auto witness = membership(A, v);
    if (as_json()) {
      json j{{"member", witness.has_value()}};
      if (witness) j["witness"] = to_json(*witness);
      out_ << j.dump() << '\n';
    } else if (witness) {
      out_ << "witness " << spaced(*witness) << '\n';
    } else {
      out_ << "not a member\n";
    }
  }

  void classify_cmd() {
    AffineSemigroup A = semigroup();
    if (!opts_.normalization_path.empty()) normalization_checked();
    Int p = prime();
    Classification c = classify(A, p);
    if (as_json()) {
      json bad = json::array();
      for (const Int& q : c.bad_primes) bad.push_back(to_json(q));
      out_ << json{{"bad_primes", bad},
                   {"f_injective", c.f_injective},
                   {"f_nilpotent", c.f_nilpotent},
                   {"fte_upper_bound", c.fte_upper_bound},
                   {"normal", c.normal},
                   {"p_weakly_normal", c.p_weakly_normal},
                   {"prime", to_json(c.prime)},
                   {"seminormal", c.seminormal}}
                  .dump()
           << '\n';
    } else {
      auto b = [](bool x) { return x ? "true" : "false"; };
      out_ << "bad_primes " << spaced(c.bad_primes) << '\n'
           << "f_injective " << b(c.f_injective) << '\n'
           << "f_nilpotent " << b(c.f_nilpotent) << '\n'
           << "fte_upper_bound " << c.fte_upper_bound << '\n'
           << "normal " << b(c.normal) << '\n'
           << "p_weakly_normal " << b(c.p_weakly_normal) << '\n'
           << "prime " << c.prime << '\n'
           << "seminormal " << b(c.seminormal) << '\n';
    }
  }

  void badprimes() {
    AffineSemigroup A = semigroup();
    if (!opts_.normalization_path.empty()) normalization_checked();
    std::vector<Int> primes = bad_primes(A);
    if (as_json()) {
      json a = json::array();
      for (const Int& q : primes) a.push_back(to_json(q));
      out_ << json{{"bad_primes", a}}.dump() << '\n';
    } else {
      out_ << spaced(primes) << '\n';
    }
  }

  void fclosure() {
    AffineSemigroup A = semigroup();
    Int p = prime();
    if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
    MonomialIdeal I = load_ideal(opts_.ideal_path, A);
    std::optional<Int> bound;
    if (!opts_.degree_bound.empty()) bound = parse_integer_arg(opts_.degree_bound, "--degree-bound");
    AffineSemigroup Abar = normalization_checked();
    CharacteristicData data{p, Abar, wkp(A, Abar, p)};
    FrobeniusClosure fc = frobenius_closure_gens(I, data, bound);
    if (!fc.sweep_only.empty())
      log(std::to_string(fc.sweep_only.size()) + " generator(s) found only by the degree sweep");
    if (as_json()) {
      out_ << json{{"degree_bound", to_json(fc.degree_bound)},
                   {"exponents", to_json(fc.closure.exponents())},
                   {"n0", fc.n0},
                   {"sweep_only", to_json(fc.sweep_only)}}
                  .dump()
           << '\n';
    } else {
      for (const IntVec& e : fc.closure.exponents()) out_ << spaced(e) << '\n';
      out_ << "n0 " << fc.n0 << '\n';
    }
  }

  void faces() {
    AffineSemigroup A = semigroup();
    if (!opts_.normalization_path.empty()) normalization_checked();
    Cone C = cone(A);
    std::vector<Face> all = enumerate_faces(C);
    if (as_json()) {
      json fs = json::array();
      for (const Face& F : all)
        fs.push_back(json{{"active_normals", F.active_normals}, {"dim", F.dim}, {"rays", to_json(F.rays())}});
      out_ << json{{"faces", fs}, {"facet_normals", to_json(C.facet_normals())}, {"rays", to_json(C.rays())}}
                  .dump()
           << '\n';
    } else {
      for (const Face& F : all) {
        out_ << "dim " << F.dim << " rays";
        for (const IntVec& r : F.rays()) out_ << ' ' << to_string(r);
        out_ << '\n';
      }
    }
  }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<AffineSemigroup> A_;
  std::optional<AffineSemigroup> Abar_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Normalizations, p-weak normalizations and Frobenius closures of affine semigroups"};
  app.name(args.empty() ? "affsemi" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--normalization", opts.normalization_path,
                 "File with generators of the normalization (verified)");

  std::function<void(Driver&)> action;
  auto sub = [&](const char* name, const char* help, void (Driver::*method)()) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", opts.file, "Semigroup file")->required();
    s->callback([&action, method] { action = [method](Driver& d) { (d.*method)(); }; });
    return s;
  };
  sub("normalize", "Hilbert basis of the normalization", &Driver::normalize);
  sub("quotient", "Generators of {v in normalization : m v in A}", &Driver::quotient)
      ->add_option("-m", opts.m, "Positive integer")
      ->required();
  sub("wkp", "p-weak normalization and its exponent n0", &Driver::weak)
      ->add_option("-p", opts.p, "Prime")
      ->required();
  sub("seminormalize", "Seminormalization", &Driver::seminormalize);
  sub("member", "Membership test with witness", &Driver::member)
      ->add_option("-v", opts.vector, "Vector as a,b,c")
      ->required();
  sub("classify", "F-singularity classification in characteristic p", &Driver::classify_cmd)
      ->add_option("-p", opts.p, "Prime")
      ->required();
  sub("badprimes", "Primes where the p-weak normalization is not the seminormalization",
      &Driver::badprimes);
  CLI::App* fc = sub("fclosure", "Frobenius closure of a monomial ideal", &Driver::fclosure);
  fc->add_option("-p", opts.p, "Prime")->required();
  fc->add_option("--ideal", opts.ideal_path, "Ideal file")->required();
  fc->add_option("--degree-bound", opts.degree_bound, "Coordinate-sum bound of the sweep");
  sub("faces", "Face lattice of the cone", &Driver::faces);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Driver driver(opts, out, err);
  const auto start = std::chrono::steady_clock::now();
  try {
    action(driver);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  driver.log("done in " +
             std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) +
             " s");
  return kOk;
}

}  // namespace affsemi
