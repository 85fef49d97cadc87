#include "hilbrel/cli.hpp"

#include "hilbrel/fuzz.hpp"
#include "hilbrel/grr.hpp"
#include "hilbrel/relations.hpp"
#include "hilbrel/surface_file.hpp"
#include "hilbrel/swbridge.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace hilbrel::cli {

namespace {

/// Raised for bad user input (unknown names, wrong shapes); maps to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

std::string display(const LatticeClass& x)
{
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            out += ", ";
        out += x[i].get_str();
    }
    return out + ")";
}

SurfaceDocument load_valid(const std::string& path)
{
    SurfaceDocument doc = load_surface(path);
    const auto issues = validate(doc.surface);
    if (!issues.empty()) {
        std::string msg = path + ": invalid surface data";
        for (const auto& issue : issues)
            msg += "\n  " + issue;
        throw InputError(msg);
    }
    return doc;
}

const LatticeClass& named_class(const SurfaceDocument& doc, const std::string& name)
{
    const LatticeClass* c = doc.find_class(name);
    if (!c)
        throw InputError("unknown class '" + name + "'");
    return *c;
}

Direction parse_direction(const std::string& text)
{
    if (text == "down")
        return Direction::down;
    if (text == "up")
        return Direction::up;
    throw InputError("direction must be 'down' or 'up', got '" + text + "'");
}

/// Runs a command body, mapping exceptions to exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return exit_fail;
    }
}

struct GrrTally {
    int character = 0;
    int difference = 0;
    int total = 0;
};

void grr_samples(const SurfaceTopology& s, fuzz::Rng& rng, int samples, long bound,
                 std::ostream& out, GrrTally& tally)
{
    const RingPtr ring = make_ring(s);
    for (int i = 1; i <= samples; ++i) {
        const LatticeClass m = fuzz::random_class(rng, s.h2.rank(), bound);
        const LatticeClass c = fuzz::random_class(rng, s.h2.rank(), bound);
        ++tally.total;
        out << "  sample " << i << " m=" << display(m) << " c=" << display(c) << ":";

        const Lemma1Result l1 = verify_lemma1(ring, m);
        if (l1.equal) {
            ++tally.character;
            out << " character ok";
        } else {
            out << " character FAIL\n" << l1.diff;
        }

        try {
            const PushforwardCharacter d = difference_character(ring, m, c);
            difference_chern(ring, m, c);
            ++tally.difference;
            out << ", difference rank " << d.rank.get_str() << " ok";
        } catch (const MismatchError& e) {
            out << ", difference FAIL\n" << e.what();
        }
        out << "\n";
    }
}

void surface_summary(const SurfaceTopology& s, std::ostream& out)
{
    out << "q=" << s.q << " chi=" << s.chi.get_str() << " h2_rank=" << s.h2.rank()
        << " k=" << display(s.k) << " xi=" << to_display(xi(s)) << "\n";
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SurfaceDocument doc = load_surface(path);
        std::vector<std::string> issues = validate(doc.surface);
        if (issues.empty()) {
            for (const auto& m : doc.moments)
                for (const auto& issue : check_moments(doc.surface, m.sequence))
                    issues.push_back("moments " + m.name + ": " + issue);
            for (const auto& [name, cls] : doc.classes)
                if (cls.size() != doc.surface.h2.rank())
                    issues.push_back("class " + name + ": wrong length");
        }
        out << "surface: " << path << "\n";
        if (!issues.empty()) {
            for (const auto& issue : issues)
                out << "invalid: " << issue << "\n";
            out << "result: FAIL (" << issues.size() << " issue" << (issues.size() == 1 ? "" : "s")
                << ")\n";
            return exit_fail;
        }
        surface_summary(doc.surface, out);
        out << "classes=" << doc.classes.size() << " moments=" << doc.moments.size()
            << " forms=" << doc.forms.size() << "\n";
        out << "result: PASS\n";
        return exit_ok;
    });
}

int cmd_grr(const GrrOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (options.samples < 0 || options.fuzz_surfaces < 0 || options.bound < 0)
            throw InputError("samples, fuzz-surfaces and bound must be nonnegative");
        const SurfaceDocument doc = load_valid(options.path);
        fuzz::Rng rng(options.seed);
        GrrTally tally;

        out << "grr report\n";
        out << "seed: " << options.seed << "\n";
        out << "samples: " << options.samples << "\n";
        out << "fuzz-surfaces: " << options.fuzz_surfaces << "\n";
        out << "surface " << options.path << ": ";
        surface_summary(doc.surface, out);
        grr_samples(doc.surface, rng, options.samples, options.bound, out, tally);

        for (int k = 1; k <= options.fuzz_surfaces; ++k) {
            const SurfaceTopology s = fuzz::random_surface(rng);
            out << "fuzz surface " << k << ": ";
            surface_summary(s, out);
            grr_samples(s, rng, options.samples, options.bound, out, tally);
        }

        const bool pass = tally.character == tally.total && tally.difference == tally.total;
        out << "character: " << tally.character << "/" << tally.total << "\n";
        out << "difference: " << tally.difference << "/" << tally.total << "\n";
        out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? exit_ok : exit_fail;
    });
}

int cmd_relate(const RelateOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SurfaceDocument doc = load_valid(options.path);
        const SurfaceTopology& s = doc.surface;
        const LatticeClass& m = named_class(doc, options.m);
        const LatticeClass& c = named_class(doc, options.c);
        const Direction dir = parse_direction(options.direction);
        const Integer n = u_exponent(s, m, c, dir);
        const bool applies = relation_applies(s, m, c, dir);

        out << "relate " << to_string(dir) << ": m=" << options.m << " " << display(m)
            << " c=" << options.c << " " << display(c) << "\n";
        out << "# m(m-k) = " << dot(s.h2, m, m - s.k).get_str() << ", N = " << n.get_str()
            << ", kappa_c = " << to_display(kappa(s, c)) << "\n";
        if (!applies)
            out << "# note: N < 0 or kappa_c^{N+1} != 0\n";

        if (const NamedMoments* src = doc.find_moments(options.input)) {
            if (!(src->sequence.m == source_class(m, c, dir)))
                throw InputError("moments '" + src->name + "' describe " + display(src->sequence.m) +
                                 ", expected " + display(source_class(m, c, dir)));
            const PushResult pushed = push(s, m, c, dir, src->sequence);
            for (const auto& w : pushed.warnings)
                out << "# warning: " << w << "\n";
            NamedMoments result{src->name + "_" + to_string(dir), options.m, pushed.result};
            SurfaceDocument echo;
            echo.moments.push_back(result);
            const ExtForm p_moments = assemble_plus(pushed.result, s.q);
            const ExtForm p_relation = relation_thm6(s, m, c, dir, assemble_plus(src->sequence, s.q));
            echo.forms.push_back({"P_plus", p_moments});
            const std::string text = write_surface(echo);
            out << text.substr(text.find("moments "));
            const bool equal = p_moments == p_relation;
            out << "# P+ from moments " << (equal ? "==" : "!=") << " relation: "
                << to_display(p_relation) << "\n";
            if (!equal && applies) {
                out << "result: FAIL\n";
                return exit_fail;
            }
            out << "result: PASS\n";
            return exit_ok;
        }
        if (const NamedForm* src = doc.find_form(options.input)) {
            if (src->form.side() != Side::primal)
                throw InputError("form '" + src->name + "' must be primal");
            const ExtForm p = relation_thm6(s, m, c, dir, src->form);
            out << "form " << src->name << "_" << to_string(dir) << " primal\n"
                << format_terms(p) << "end\n";
            out << "result: PASS\n";
            return exit_ok;
        }
        throw InputError("no moments or form named '" + options.input + "'");
    });
}

int cmd_adjunction(const AdjunctionOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SurfaceDocument doc = load_valid(options.path);
        const SurfaceTopology& s = doc.surface;
        const LatticeClass& c = named_class(doc, options.curve);
        std::vector<LatticeClass> basics;
        for (const auto& name : options.basics)
            basics.push_back(named_class(doc, name));
        std::vector<AdjunctionVerdict> verdicts;
        try {
            verdicts = adjunction_check(s, basics, c, Integer(options.pa));
        } catch (const Error& e) {
            throw InputError(e.what());
        }

        out << "adjunction: curve " << options.curve << " " << display(c)
            << " c^2=" << dot(s.h2, c, c).get_str() << " k.c=" << dot(s.h2, s.k, c).get_str()
            << " p_a=" << options.pa << "\n";
        bool pass = true;
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            const auto& v = verdicts[i];
            pass = pass && v.allowed && v.genus_identity_holds;
            out << options.basics[i] << " " << display(v.m) << " m.c=" << v.mc.get_str() << ": "
                << (v.allowed ? "allowed" : "VIOLATION") << " (" << v.reason << ")";
            if (v.forced_shift)
                out << " shift=" << v.forced_shift->get_str()
                    << " genus-identity=" << (v.genus_identity_holds ? "ok" : "FAIL");
            out << "\n";
        }
        out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? exit_ok : exit_fail;
    });
}

int cmd_os_equiv(const std::string& path, long box, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (box < 0)
            throw InputError("box must be nonnegative");
        const SurfaceDocument doc = load_valid(path);
        const SurfaceTopology& s = doc.surface;
        long checked = 0, failed = 0, both = 0;
        for (long mc = -box; mc <= box; ++mc)
            for (long kc = -box; kc <= box; ++kc) {
                ++checked;
                try {
                    both += os_condition_equiv(Integer(mc), Integer(kc)).both_cases;
                } catch (const MismatchError& e) {
                    ++failed;
                    out << "mismatch: " << e.what() << "\n";
                }
            }
        out << "os-equiv box " << box << ": " << checked - failed << "/" << checked
            << " equivalent, " << both << " with both cases\n";

        for (const auto& [cname, c] : doc.classes) {
            const GenusTranslation g = genus_selfintersection_translate(s, c);
            out << "class " << cname << ": g=" << g.genus.get_str() << " n=" << g.n.get_str()
                << " 2g+n=k.c+2 " << (g.identity_holds ? "ok" : "FAIL") << "\n";
            for (const auto& w : g.warnings)
                out << "  # " << w << "\n";
            if (!g.identity_holds)
                ++failed;
            for (const auto& [mname, m] : doc.classes) {
                try {
                    const OsEquivalence e = os_condition_equiv(s, m, c);
                    out << "  m=" << mname << " c_1.c=" << dot(s.h2, spinc_chern(s, m), c).get_str()
                        << " lhs=" << e.lhs << " rhs=" << e.rhs << " epsilon="
                        << (e.epsilon ? std::to_string(*e.epsilon) : std::string("none")) << "\n";
                } catch (const MismatchError& e) {
                    ++failed;
                    out << "  m=" << mname << " mismatch: " << e.what() << "\n";
                }
            }
        }
        out << "result: " << (failed == 0 ? "PASS" : "FAIL") << "\n";
        return failed == 0 ? exit_ok : exit_fail;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks for surface cohomology and Poincare-invariant relations", "hilbrel"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a surface file");
    validate_cmd->add_option("path", validate_path, "Surface file")->required();

    GrrOptions grr;
    auto* grr_cmd = app.add_subcommand("grr", "Check the pushforward character over random classes");
    grr_cmd->add_option("path", grr.path, "Surface file")->required();
    grr_cmd->add_option("--samples", grr.samples, "Random classes per surface");
    grr_cmd->add_option("--seed", grr.seed, "Random seed");
    grr_cmd->add_option("--fuzz-surfaces", grr.fuzz_surfaces, "Additional random surfaces");
    grr_cmd->add_option("--bound", grr.bound, "Coordinate bound for random classes");

    RelateOptions rel;
    auto* rel_cmd = app.add_subcommand("relate", "Transport moments or invariants along a curve class");
    rel_cmd->add_option("path", rel.path, "Surface file")->required();
    rel_cmd->add_option("--m", rel.m, "Target class name")->required();
    rel_cmd->add_option("--c", rel.c, "Curve class name")->required();
    rel_cmd->add_option("--direction", rel.direction, "down (from m-c) or up (from m+c)")
        ->check(CLI::IsMember({"down", "up"}));
    rel_cmd->add_option("--input", rel.input, "Name of a moments or form block")->required();

    AdjunctionOptions adj;
    auto* adj_cmd = app.add_subcommand("adjunction", "Adjunction inequality for declared basic classes");
    adj_cmd->add_option("path", adj.path, "Surface file")->required();
    adj_cmd->add_option("--curve", adj.curve, "Curve class name")->required();
    adj_cmd->add_option("--pa", adj.pa, "Arithmetic genus of the curve")->required();
    adj_cmd->add_option("--basics", adj.basics, "Names of basic classes")->required()->delimiter(',');

    std::string os_path;
    long box = 10;
    auto* os_cmd = app.add_subcommand("os-equiv", "Sweep the genus-bound equivalence");
    os_cmd->add_option("path", os_path, "Surface file")->required();
    os_cmd->add_option("--box", box, "Bound on |m.c| and |k.c|");

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    if (*validate_cmd)
        return cmd_validate(validate_path, out, err);
    if (*grr_cmd)
        return cmd_grr(grr, out, err);
    if (*rel_cmd)
        return cmd_relate(rel, out, err);
    if (*adj_cmd)
        return cmd_adjunction(adj, out, err);
    return cmd_os_equiv(os_path, box, out, err);
}

}  // namespace hilbrel::cli
