// Command-line front end: constructs and verifies Paley cores, difference
// families, two-variable orthogonal designs, symmetric Hadamard matrices and
// Legendre pairs. Exit codes: 0 success/valid, 1 verification failure,
// 2 usage or I/O error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odh/gf.hpp"
#include "odh/hadamard.hpp"
#include "odh/io.hpp"
#include "odh/legendre.hpp"
#include "odh/legendre_data.hpp"
#include "odh/paley.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

bool g_quiet = false;

void info(const std::string& msg) {
    if (!g_quiet) std::cerr << msg << "\n";
}

std::string join_digits(const std::vector<int>& digits) {
    std::string s;
    for (size_t i = 0; i < digits.size(); ++i) s += (i ? "," : "") + std::to_string(digits[i]);
    return s;
}

// progress printer for long verifications, throttled to one line per 5 s;
// quick runs stay silent
struct ProgressPrinter {
    std::mutex mu;
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
    bool printed = false;

    void operator()(std::int64_t done, std::int64_t total) {
        if (g_quiet) return;
        std::lock_guard<std::mutex> lock(mu);
        auto now = std::chrono::steady_clock::now();
        if (done == total && !printed) return;
        if (done < total && now - last < std::chrono::seconds(5)) return;
        last = now;
        printed = true;
        std::cerr << "verify: " << done << "/" << total << " row pairs\n";
    }
};

odh::DifferenceFamily family_for(int q, const std::string& family_path, int workers) {
    int n = (1 + q) / 4;
    if (!family_path.empty()) {
        odh::DifferenceFamily fam =
            odh::read_file<odh::DifferenceFamily>(family_path, [](std::istream& is) {
                return odh::read_family(is);
            });
        if (fam.n != n)
            throw odh::io_error("family has n = " + std::to_string(fam.n) + ", but q = " +
                                std::to_string(q) + " needs n = " + std::to_string(n));
        return fam;
    }
    if (n > 15)
        throw odh::io_error("n = (1+q)/4 = " + std::to_string(n) +
                            " is beyond the search bound; supply --family FILE");
    auto fams = odh::search_families(n, 1, 15, workers);
    if (fams.empty()) throw odh::io_error("no difference family found for n = " + std::to_string(n));
    return fams.front();
}

void write_or_stdout(const std::string& out, const std::function<void(std::ostream&)>& writer) {
    if (out.empty()) {
        writer(std::cout);
        return;
    }
    odh::write_file(out, writer);
}

std::string family_params(const odh::DifferenceFamily& fam) {
    std::ostringstream os;
    os << "(" << fam.n << "; " << fam.k(0) << "," << fam.k(1) << "," << fam.k(2) << ","
       << fam.k(3) << "; " << fam.lambda() << ")";
    return os.str();
}

// ---- subcommand bodies ----------------------------------------------------

int run_field_info(int p, int k) {
    odh::FiniteField f(p, k);
    std::cout << "q " << f.q() << "\n";
    std::cout << "p " << f.p() << "\n";
    std::cout << "k " << f.k() << "\n";
    if (k > 1) std::cout << "modulus " << join_digits(f.modulus()) << "\n";
    std::cout << "generator " << join_digits(f.digits(f.generator())) << "\n";
    std::cout << "order:\n";
    for (int e : f.paley_order()) std::cout << join_digits(f.digits(e)) << "\n";
    return kExitValid;
}

int run_paley_build(int q, const std::string& out) {
    auto pk = odh::factor_prime_power(q);
    if (!pk || q % 4 != 3)
        throw odh::io_error("q must be a prime power with q = 3 (mod 4), got " + std::to_string(q));
    odh::FiniteField f(pk->first, pk->second);
    odh::PaleyBundle b = odh::build_paley(f);
    odh::write_file(out + ".q.intmat", [&](std::ostream& os) { odh::write_intmat(os, b.core); });
    odh::write_file(out + ".r.intmat", [&](std::ostream& os) { odh::write_intmat(os, b.r); });
    odh::write_file(out + ".d.signmat", [&](std::ostream& os) { odh::write_signmat(os, b.d); });
    odh::write_file(out + ".j.signmat", [&](std::ostream& os) { odh::write_signmat(os, b.j); });
    info("wrote " + out + ".{q,r}.intmat and " + out + ".{d,j}.signmat");
    return kExitValid;
}

int run_df_search(int n, std::size_t limit, int max_n, int workers, const std::string& out) {
    auto fams = odh::search_families(n, limit, max_n, workers);
    write_or_stdout(out, [&](std::ostream& os) {
        for (const auto& fam : fams) odh::write_family(os, fam);
    });
    info(std::to_string(fams.size()) + " families");
    return kExitValid;
}

int run_df_verify(const std::string& path) {
    odh::DifferenceFamily fam = odh::read_file<odh::DifferenceFamily>(
        path, [](std::istream& is) { return odh::read_family(is); });
    odh::FamilyReport rep = odh::verify_family(fam);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    std::cout << (rep.valid ? "valid " : "invalid ") << family_params(fam) << "\n";
    return rep.valid ? kExitValid : kExitInvalid;
}

int run_od_build(const std::string& type, int q, const std::string& family_path,
                 const std::string& out, int workers) {
    if (q % 8 != 3 || !odh::factor_prime_power(q))
        throw odh::io_error("q must be a prime power with q = 3 (mod 8), got " + std::to_string(q));
    odh::DifferenceFamily fam = family_for(q, family_path, workers);
    odh::OdMatrix m = type == "skew" ? odh::build_skew_od(fam) : odh::build_symmetric_od(fam);
    write_or_stdout(out, [&](std::ostream& os) { odh::write_odmat(os, m); });
    return kExitValid;
}

int run_od_verify(const std::string& path) {
    odh::OdMatrix m =
        odh::read_file<odh::OdMatrix>(path, [](std::istream& is) { return odh::read_odmat(is); });
    odh::OdVerifyResult res = odh::verify_od(m);
    if (!res.ok) {
        std::cout << "invalid: " << res.reason;
        if (res.row >= 0) std::cout << " at cell (" << res.row << ", " << res.col << ")";
        std::cout << "\n";
        return kExitInvalid;
    }
    std::cout << res.params(m.order());
    if (odh::is_skew_type(m)) std::cout << " skew-type";
    if (odh::is_symmetric(m)) std::cout << " symmetric";
    std::cout << "\n";
    return kExitValid;
}

int run_hadamard_build(int q, const std::string& family_path, const std::string& out, int workers) {
    odh::DifferenceFamily fam = family_for(q, family_path, workers);
    odh::SignMatrix h = odh::build_symmetric_hadamard(q, fam);
    write_or_stdout(out, [&](std::ostream& os) { odh::write_signmat(os, h); });
    info("order " + std::to_string(h.order()));
    return kExitValid;
}

int run_hadamard_verify(const std::string& path, bool symmetric, int workers) {
    odh::SignMatrix h =
        odh::read_file<odh::SignMatrix>(path, [](std::istream& is) { return odh::read_signmat(is); });
    if (h.order() > 8000)
        std::cerr << "warning: order " << h.order() << " verification may take a while\n";
    ProgressPrinter progress;
    bool ok = odh::verify_hadamard(h, workers,
                                   [&](std::int64_t d, std::int64_t t) { progress(d, t); });
    bool sym_ok = !symmetric || odh::is_symmetric(h);
    std::cout << (ok ? "hadamard" : "not hadamard");
    if (symmetric) std::cout << (sym_ok ? " symmetric" : " not symmetric");
    std::cout << " (order " << h.order() << ")\n";
    return ok && sym_ok ? kExitValid : kExitInvalid;
}

int run_legp_verify(const std::string& path) {
    odh::LegendrePair p =
        odh::read_file<odh::LegendrePair>(path, [](std::istream& is) { return odh::read_pair(is); });
    odh::LegpReport rep = odh::verify_legp(p);
    if (rep.ok) {
        std::cout << "valid LegP of length " << p.v << "\n";
        return kExitValid;
    }
    std::cout << "invalid: " << rep.reason << "\n";
    return kExitInvalid;
}

int run_legp_equiv(const std::string& a, const std::string& b) {
    auto pa = odh::read_file<odh::LegendrePair>(a, [](std::istream& is) { return odh::read_pair(is); });
    auto pb = odh::read_file<odh::LegendrePair>(b, [](std::istream& is) { return odh::read_pair(is); });
    bool eq = odh::equivalent(pa, pb);
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? kExitValid : kExitInvalid;
}

int run_legp_canon(const std::string& path, const std::string& out) {
    auto p = odh::read_file<odh::LegendrePair>(path, [](std::istream& is) { return odh::read_pair(is); });
    odh::LegendrePair canon = odh::canonical_form(p);
    write_or_stdout(out, [&](std::ostream& os) { odh::write_pair(os, canon); });
    return kExitValid;
}

int run_legp_orbits(int v, const std::vector<int>& gens) {
    odh::OrbitTable t = odh::orbit_table(v, gens);
    std::cout << "subgroup " << join_digits(t.subgroup) << "\n";
    for (size_t l = 0; l < t.orbits.size(); ++l)
        std::cout << l << ": " << join_digits(t.orbits[l]) << "\n";
    return kExitValid;
}

int run_legp_search(int v, const std::vector<int>& gens, std::uint64_t budget,
                    const std::string& checkpoint_path, int workers, const std::string& out) {
    std::optional<odh::LegpCheckpoint> resume;
    if (!checkpoint_path.empty()) {
        std::ifstream probe(checkpoint_path);
        if (probe.good()) resume = odh::read_checkpoint_file(checkpoint_path);
    }
    odh::LegpSearchOptions opts;
    opts.workers = workers;
    if (!checkpoint_path.empty())
        opts.on_checkpoint = [&](const odh::LegpCheckpoint& cp) {
            odh::write_checkpoint_file(checkpoint_path, cp);
        };
    odh::LegpSearchResult res =
        odh::search_h_invariant(v, gens, budget, resume ? &*resume : nullptr, opts);
    write_or_stdout(out, [&](std::ostream& os) {
        for (const auto& p : res.pairs) odh::write_pair(os, p);
    });
    info("space " + std::to_string(res.stats.space) + ", cursor " + std::to_string(res.stats.cursor) +
         ", enumerated " + std::to_string(res.stats.enumerated) + ", psd_pass " +
         std::to_string(res.stats.psd_pass) + ", pairs " + std::to_string(res.stats.pairs_found) +
         (res.exhausted ? ", exhausted" : ""));
    return kExitValid;
}

int run_legp_dataset_verify() {
    odh::DatasetReport rep = odh::verify_published_solutions();
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << "13 solutions decoded, verified, H-invariant: " << (rep.ok ? "yes" : "no") << "\n";
    std::cout << "distinct classes among the 13: " << rep.distinct_classes << "\n";
    for (auto [i, j] : rep.equivalent_solutions)
        std::cout << "note: solutions " << i << " and " << j << " are equivalent\n";
    return rep.ok ? kExitValid : kExitInvalid;
}

int run_pipeline(int q, const std::string& family_path, const std::string& out, int workers) {
    using clock = std::chrono::steady_clock;
    auto stamp = [start = clock::now()] {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
        return " [" + std::to_string(ms.count()) + " ms]";
    };
    if (q % 8 != 3 || !odh::factor_prime_power(q))
        throw odh::io_error("q must be a prime power with q = 3 (mod 8), got " + std::to_string(q));

    odh::DifferenceFamily fam = family_for(q, family_path, workers);
    std::cout << "family " << family_params(fam) << stamp() << "\n";

    odh::OdMatrix y = odh::build_symmetric_od(fam);
    odh::OdVerifyResult od = odh::verify_od(y);
    if (!od.ok || !odh::is_symmetric(y)) {
        std::cout << "od FAILED: " << od.reason << "\n";
        return kExitInvalid;
    }
    std::cout << "od " << od.params(y.order()) << " symmetric" << stamp() << "\n";

    odh::SignMatrix h = odh::build_symmetric_hadamard(q, fam);
    std::cout << "blow-up order " << h.order() << stamp() << "\n";

    ProgressPrinter progress;
    bool ok = odh::verify_hadamard(h, workers,
                                   [&](std::int64_t d, std::int64_t t) { progress(d, t); });
    bool sym = odh::is_symmetric(h);
    std::cout << "hadamard " << (ok ? "valid" : "INVALID") << (sym ? " symmetric" : " NOT symmetric")
              << stamp() << "\n";
    if (!out.empty()) {
        odh::write_file(out, [&](std::ostream& os) { odh::write_signmat(os, h); });
        info("wrote " + out);
    }
    return ok && sym ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal designs, symmetric Hadamard matrices, and Legendre pairs"};
    app.require_subcommand(1);
    app.fallthrough();  // --quiet/--workers may follow the subcommand
    app.add_flag("--quiet", g_quiet, "suppress progress and informational output");

    int workers = 1;
    app.add_option("--workers", workers, "worker threads for search and verification")
        ->capture_default_str();

    // field
    auto* field = app.add_subcommand("field", "finite field utilities");
    field->require_subcommand(1);
    auto* field_info = field->add_subcommand("info", "print q, modulus, generator and Paley ordering");
    int fp = 0, fk = 1;
    field_info->add_option("--p", fp, "prime characteristic")->required();
    field_info->add_option("--k", fk, "extension degree")->capture_default_str();

    // paley
    auto* paley = app.add_subcommand("paley", "Paley core matrices");
    paley->require_subcommand(1);
    auto* paley_build = paley->add_subcommand("build", "write Q, R, D and J for a prime power q");
    int pq = 0;
    std::string paley_out;
    paley_build->add_option("--q", pq, "prime power, q = 3 (mod 4)")->required();
    paley_build->add_option("--out", paley_out, "output path prefix")->required();

    // df
    auto* df = app.add_subcommand("df", "difference families in Z_n");
    df->require_subcommand(1);
    auto* df_search = df->add_subcommand("search", "exhaustive family search");
    int dn = 0, dmax = 15;
    std::size_t dlimit = 0;
    std::string df_out;
    df_search->add_option("--n", dn, "odd modulus")->required();
    df_search->add_option("--limit", dlimit, "stop after this many families");
    df_search->add_option("--max-n", dmax, "enumeration bound")->capture_default_str();
    df_search->add_option("--out", df_out, "write families here instead of stdout");
    auto* df_verify = df->add_subcommand("verify", "verify a family file");
    std::string df_file;
    df_verify->add_option("file", df_file, "family JSON file")->required();

    // od
    auto* od = app.add_subcommand("od", "two-variable orthogonal designs");
    od->require_subcommand(1);
    auto* od_build = od->add_subcommand("build", "build the OD(1+q; 1, q)");
    std::string od_type, od_family, od_out;
    int oq = 0;
    od_build->add_option("--type", od_type, "skew or symmetric")
        ->required()
        ->check(CLI::IsMember({"skew", "symmetric"}));
    od_build->add_option("--q", oq, "prime power, q = 3 (mod 8)")->required();
    od_build->add_option("--family", od_family, "family JSON file (searched when omitted)");
    od_build->add_option("--out", od_out, "write the ODMAT here instead of stdout");
    auto* od_verify = od->add_subcommand("verify", "verify an ODMAT file");
    std::string od_file;
    od_verify->add_option("file", od_file, "ODMAT file")->required();

    // hadamard
    auto* had = app.add_subcommand("hadamard", "symmetric Hadamard matrices of order q(1+q)");
    had->require_subcommand(1);
    auto* had_build = had->add_subcommand("build", "build and write the matrix");
    int hq = 0;
    std::string had_family, had_out;
    had_build->add_option("--q", hq, "prime power, q = 3 (mod 8)")->required();
    had_build->add_option("--family", had_family, "family JSON file (searched when omitted)");
    had_build->add_option("--out", had_out, "output SIGNMAT file")->required();
    auto* had_verify = had->add_subcommand("verify", "verify a SIGNMAT file");
    std::string had_file;
    bool had_sym = false;
    had_verify->add_option("file", had_file, "SIGNMAT file")->required();
    had_verify->add_flag("--symmetric", had_sym, "also require H = H^T");

    // legp
    auto* legp = app.add_subcommand("legp", "Legendre pairs");
    legp->require_subcommand(1);
    auto* legp_verify = legp->add_subcommand("verify", "verify a pair file");
    std::string lp_file;
    legp_verify->add_option("file", lp_file, "pair JSON file (explicit or label form)")->required();
    auto* legp_equiv = legp->add_subcommand("equiv", "decide equivalence of two pairs");
    std::string lp_a, lp_b;
    legp_equiv->add_option("a", lp_a, "first pair file")->required();
    legp_equiv->add_option("b", lp_b, "second pair file")->required();
    auto* legp_canon = legp->add_subcommand("canon", "print the canonical form of a pair");
    std::string lp_canon_file, lp_canon_out;
    legp_canon->add_option("file", lp_canon_file, "pair JSON file")->required();
    legp_canon->add_option("--out", lp_canon_out, "write here instead of stdout");
    auto* legp_orbits = legp->add_subcommand("orbits", "print the labelled orbit table");
    int lv = 0;
    std::vector<int> lgens;
    legp_orbits->add_option("--v", lv, "odd length")->required();
    legp_orbits->add_option("--gen", lgens, "subgroup generators (repeatable)")->required();
    auto* legp_search = legp->add_subcommand("search", "H-invariant pair search");
    int sv = 0;
    std::vector<int> sgens;
    std::uint64_t budget = 1000000;
    std::string checkpoint, legp_out;
    legp_search->add_option("--v", sv, "odd length")->required();
    legp_search->add_option("--gen", sgens, "subgroup generators (repeatable)")->required();
    legp_search->add_option("--budget", budget, "candidate blocks per run")->capture_default_str();
    legp_search->add_option("--checkpoint", checkpoint, "cursor file, resumed when present");
    legp_search->add_option("--out", legp_out, "write found pairs here instead of stdout");
    auto* legp_dataset = legp->add_subcommand("dataset", "embedded datasets");
    legp_dataset->require_subcommand(1);
    auto* legp_dataset_verify = legp_dataset->add_subcommand("verify", "verify the embedded solutions");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "family -> symmetric OD -> blow-up -> verified H");
    int ppq = 0;
    std::string pipe_family, pipe_out;
    pipe->add_option("--q", ppq, "prime power, q = 3 (mod 8)")->required();
    pipe->add_option("--family", pipe_family, "family JSON file (searched when n <= 15)");
    pipe->add_option("--out", pipe_out, "also write the SIGNMAT here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*field_info) return run_field_info(fp, fk);
        if (*paley_build) return run_paley_build(pq, paley_out);
        if (*df_search) return run_df_search(dn, dlimit, dmax, workers, df_out);
        if (*df_verify) return run_df_verify(df_file);
        if (*od_build) return run_od_build(od_type, oq, od_family, od_out, workers);
        if (*od_verify) return run_od_verify(od_file);
        if (*had_build) return run_hadamard_build(hq, had_family, had_out, workers);
        if (*had_verify) return run_hadamard_verify(had_file, had_sym, workers);
        if (*legp_verify) return run_legp_verify(lp_file);
        if (*legp_equiv) return run_legp_equiv(lp_a, lp_b);
        if (*legp_canon) return run_legp_canon(lp_canon_file, lp_canon_out);
        if (*legp_orbits) return run_legp_orbits(lv, lgens);
        if (*legp_search) return run_legp_search(sv, sgens, budget, checkpoint, workers, legp_out);
        if (*legp_dataset_verify) return run_legp_dataset_verify();
        if (*pipe) return run_pipeline(ppq, pipe_family, pipe_out, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
