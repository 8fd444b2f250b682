#include "polyprime/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polyprime/errors.hpp"
#include "polyprime/modroot.hpp"
#include "polyprime/poly.hpp"
#include "polyprime/report.hpp"
#include "polyprime/schur.hpp"

namespace polyprime::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidCertificate = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

constexpr const char* kGrammarHelp =
    "polynomial grammar:\n"
    "  poly := term { ('+'|'-') term }      (unary '-' allowed on the first term)\n"
    "  term := integer ['*'? var] | var\n"
    "  var  := 'x' ['^' uint]\n"
    "examples: \"x^2+1\", \"x^3 - 2x + 7\", \"-3x^2 + 5\"\n";

unsigned default_threads() {
    if (const char* env = std::getenv("POLYPRIME_THREADS")) {
        char* end = nullptr;
        unsigned long value = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open \"" + path + "\" for writing");
    file << contents;
    if (!file) throw Error("failed writing \"" + path + '"');
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open \"" + path + "\" for reading");
    std::ostringstream contents;
    contents << file.rdbuf();
    return contents.str();
}

struct Options {
    std::string poly_text;
    std::uint64_t bound = 2;
    int rounds = 1;
    std::uint64_t rng_seed = 0;
    unsigned threads = 0; // 0 = resolve from env/hardware at run time
    std::string cert_path;
    std::string json_path;
    std::string csv_path;
    std::uint64_t prime = 2;
};

int run_enumerate(const Options& opt, std::ostream& out) {
    Polynomial poly = Polynomial::parse(opt.poly_text);
    EngineState state = enumerate(poly, opt.rounds, opt.rng_seed);
    if (state.status == EngineStatus::AllPrimes) {
        out << "every prime divides some value (zero polynomial)\n";
    }
    for (const PrimeRecord& rec : state.records) {
        out << rec.p.get_str() << " (witness " << rec.witness.get_str() << ")\n";
    }
    if (!opt.json_path.empty()) {
        write_file(opt.json_path, serialize_certificate(emit_certificate(state)));
    }
    return kExitOk;
}

int run_sieve(const Options& opt, std::ostream& out) {
    Polynomial poly = Polynomial::parse(opt.poly_text);
    unsigned threads = opt.threads == 0 ? default_threads() : opt.threads;
    std::vector<std::uint64_t> primes = sieve_primes(poly, opt.bound, threads);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0) out << ' ';
        out << primes[i];
    }
    out << '\n';
    if (!opt.csv_path.empty()) write_file(opt.csv_path, sieve_csv(primes));
    return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    std::string contents = read_file(opt.cert_path);
    Certificate cert;
    try {
        cert = parse_certificate(contents);
    } catch (const MalformedCertificate& error) {
        err << "malformed certificate: " << error.what() << '\n';
        return kExitInvalidCertificate;
    }
    CheckResult result;
    try {
        result = check_certificate(cert);
    } catch (const MalformedCertificate& error) {
        err << "malformed certificate: " << error.what() << '\n';
        return kExitInvalidCertificate;
    }
    if (result.valid) {
        out << "valid\n";
        return kExitOk;
    }
    for (const RecordFailure& failure : result.failures) {
        out << "record " << failure.index << ": " << failure.reason << '\n';
    }
    out << "invalid\n";
    return kExitInvalidCertificate;
}

int run_density(const Options& opt, std::ostream& out) {
    Polynomial poly = Polynomial::parse(opt.poly_text);
    unsigned threads = opt.threads == 0 ? default_threads() : opt.threads;
    DensityReport report = density(poly, opt.bound, threads);
    out << "polynomial " << report.polynomial << '\n'
        << "bound " << report.bound << '\n'
        << "primes_total " << report.primes_total << '\n'
        << "primes_dividing " << report.primes_dividing << '\n'
        << "ratio " << std::fixed << std::setprecision(6) << report.ratio << '\n';
    return kExitOk;
}

int run_roots(const Options& opt, std::ostream& out) {
    Polynomial poly = Polynomial::parse(opt.poly_text);
    if (has_root_mod(poly, opt.prime)) {
        out << "has_root true\n";
        auto root = find_root_mod(poly, opt.prime, opt.rng_seed);
        if (root) out << "root " << *root << '\n';
    } else {
        out << "has_root false\n";
    }
    return kExitOk;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime divisors of polynomial values: constructive enumeration,"
                 " root-mod-p oracle, bulk sieve, and verifiable certificates"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "grow a set of certified prime divisors of values of P");
    cmd_enumerate->add_option("--poly", opt.poly_text, "polynomial expression")->required();
    cmd_enumerate->add_option("--rounds", opt.rounds, "number of primes to produce")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    cmd_enumerate->add_option("--seed", opt.rng_seed, "factoring RNG seed (default 0)");
    cmd_enumerate->add_option("--json", opt.json_path, "write a certificate to this path");

    CLI::App* cmd_sieve =
        app.add_subcommand("sieve", "all primes <= bound dividing some value of P");
    cmd_sieve->add_option("--poly", opt.poly_text, "polynomial expression")->required();
    cmd_sieve->add_option("--bound", opt.bound, "inclusive prime bound")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    cmd_sieve->add_option("--threads", opt.threads, "worker threads (default: all cores)");
    cmd_sieve->add_option("--csv", opt.csv_path, "write the primes as CSV to this path");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check a certificate file");
    cmd_verify->add_option("--cert", opt.cert_path, "certificate JSON path")->required();

    CLI::App* cmd_density =
        app.add_subcommand("density", "fraction of primes <= bound dividing some value of P");
    cmd_density->add_option("--poly", opt.poly_text, "polynomial expression")->required();
    cmd_density->add_option("--bound", opt.bound, "inclusive prime bound")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    cmd_density->add_option("--threads", opt.threads, "worker threads (default: all cores)");

    CLI::App* cmd_roots = app.add_subcommand("roots", "roots of P modulo a prime");
    cmd_roots->add_option("--poly", opt.poly_text, "polynomial expression")->required();
    cmd_roots->add_option("--prime", opt.prime, "prime modulus")->required();

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes reversed argv
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& error) {
        err << error.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_enumerate)) return run_enumerate(opt, out);
        if (app.got_subcommand(cmd_sieve)) return run_sieve(opt, out);
        if (app.got_subcommand(cmd_verify)) return run_verify(opt, out, err);
        if (app.got_subcommand(cmd_density)) return run_density(opt, out);
        if (app.got_subcommand(cmd_roots)) return run_roots(opt, out);
        err << "no subcommand selected\n";
        return kExitUsage;
    } catch (const SyntaxError& error) {
        err << "bad polynomial: " << error.what() << '\n' << kGrammarHelp;
        return kExitUsage;
    } catch (const EmptyInput& error) {
        err << "bad polynomial: " << error.what() << '\n' << kGrammarHelp;
        return kExitUsage;
    } catch (const DegreeCapExceeded& error) {
        err << "bad polynomial: " << error.what() << '\n' << kGrammarHelp;
        return kExitUsage;
    } catch (const NotPrime& error) {
        err << error.what() << '\n';
        return kExitUsage;
    } catch (const Error& error) {
        err << error.what() << '\n';
        return kExitComputation;
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << '\n';
        return kExitComputation;
    }
}

} // namespace polyprime::cli
