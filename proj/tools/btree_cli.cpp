// btree: command-line front end for the Bruhat-Tits tree library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bt/gallery.hpp"
#include "bt/literal.hpp"
#include "bt/report.hpp"

using namespace bt;
using json = nlohmann::json;

namespace {

struct FieldOpts {
    long p = 2;
    int f = 1, e = 1, precision = 64;
};

void add_field_opts(CLI::App* cmd, FieldOpts& o)
{
    cmd->add_option("--p", o.p, "residue characteristic")->required();
    cmd->add_option("--f", o.f, "unramified degree")->capture_default_str();
    cmd->add_option("--e", o.e, "ramification index")->capture_default_str();
    cmd->add_option("--precision", o.precision, "relative precision in digits")->capture_default_str();
}

FieldPtr make_field(const FieldOpts& o) { return Field::make(o.p, o.f, o.e, o.precision); }

void write_file(const std::string& path, const std::string& text)
{
    if (path.empty()) return;
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::FileError("cannot write " + path);
    out << text;
}

EmbeddingSpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CLI::FileError("cannot read " + path);
    return EmbeddingSpec::from_json(json::parse(in));
}

struct RunOpts {
    int length = -1;
    long radius = -1;
    std::string dot, quotient_dot;
    bool serial = false;
};

void add_run_opts(CLI::App* cmd, RunOpts& o, bool dots)
{
    cmd->add_option("--length,-L", o.length, "word length bound (default from spec, else 6)");
    cmd->add_option("--radius,-R", o.radius, "truncation radius (default: diameter + 2 s + 4)");
    if (dots) {
        cmd->add_option("--dot", o.dot, "write the orbit tree as DOT ('-' for stdout)");
        cmd->add_option("--quotient-dot", o.quotient_dot, "write the quotient tree of groups as DOT");
        cmd->add_flag("--serial", o.serial, "use the serial orbit kernel");
    }
}

int emit(const RunResult& r, const RunOpts& o)
{
    std::cout << dump(r.report);
    write_file(o.dot, r.orbit_dot);
    write_file(o.quotient_dot, r.quotient_dot);
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bruhat-Tits trees, trees of groups and their realizations"};
    app.require_subcommand(1);

    // field make
    auto* field = app.add_subcommand("field", "field setup");
    field->require_subcommand(1);
    auto* field_make = field->add_subcommand("make", "construct K and print its data");
    FieldOpts fo;
    add_field_opts(field_make, fo);

    // classify
    auto* cls = app.add_subcommand("classify", "classify an element of PGL(2, K)");
    FieldOpts co;
    std::string matrix;
    add_field_opts(cls, co);
    cls->add_option("--matrix", matrix, "matrix literal \"a,b;c,d\"")->required();

    // tree of-ends
    auto* tree = app.add_subcommand("tree", "subtrees of the Bruhat-Tits tree");
    tree->require_subcommand(1);
    auto* of_ends = tree->add_subcommand("of-ends", "tree spanned by a set of ends, as DOT");
    FieldOpts to;
    std::vector<std::string> points;
    long radius = 4;
    add_field_opts(of_ends, to);
    of_ends->add_option("--points", points, "point literals")->required()->expected(1, -1);
    of_ends->add_option("--radius", radius, "truncation radius")->capture_default_str();

    // check / realize
    auto* check = app.add_subcommand("check", "check the admissibility conditions of an embedding");
    auto* realize = app.add_subcommand("realize", "build and audit the orbit tree of an embedding");
    std::string spec_path;
    RunOpts check_o, real_o;
    check->add_option("--spec", spec_path, "embedding spec (JSON)")->required()->check(CLI::ExistingFile);
    add_run_opts(check, check_o, false);
    realize->add_option("--spec", spec_path, "embedding spec (JSON)")->required()->check(CLI::ExistingFile);
    add_run_opts(realize, real_o, true);

    // gallery
    auto* gallery = app.add_subcommand("gallery", "built-in constructions, full pipeline");
    gallery->require_subcommand(1);
    auto* fp = gallery->add_subcommand("free-product", "Z_n * Z_m");
    auto* tri = gallery->add_subcommand("triangle", "dyadic D_n *_{Z_2} Z_2m");
    long gp = 3;
    int gn = 2, gm = 2, gr = 1, ge = 1, gprec = 64;
    std::string spec_out;
    RunOpts gal_o;
    fp->add_option("--p", gp, "prime")->required();
    fp->add_option("--n", gn, "order at A")->required();
    fp->add_option("--m", gm, "order at B")->required();
    fp->add_option("--r", gr, "half the distance between the mirrors")->capture_default_str();
    tri->add_option("--n", gn, "odd n >= 3")->required();
    tri->add_option("--m", gm, "odd m >= 1")->required();
    tri->add_option("--e", ge, "ramification index")->capture_default_str();
    for (auto* g : {fp, tri}) {
        g->add_option("--precision", gprec, "relative precision in digits")->capture_default_str();
        g->add_option("--spec-out", spec_out, "write the generated spec (JSON)");
        add_run_opts(g, gal_o, true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto bounds = [](const EmbeddingSpec& s, const RunOpts& o) {
        return std::pair<int, long>{o.length >= 0 ? o.length : s.L, o.radius >= 0 ? o.radius : s.radius()};
    };

    try {
        if (*field_make) {
            std::cout << dump(field_report(*make_field(fo)));
            return kExitOk;
        }
        if (*cls) {
            const FieldPtr F = make_field(co);
            std::cout << dump(classify_report(Pgl2(parse_matrix(F, matrix))));
            return kExitOk;
        }
        if (*of_ends) {
            const FieldPtr F = make_field(to);
            std::vector<ProjPoint> L;
            for (const auto& s : points) L.push_back(parse_point(F, s));
            std::cout << to_dot(tree_of_ends(L, radius));
            return kExitOk;
        }
        if (*check) {
            const auto spec = load_spec(spec_path);
            const auto [L, R] = bounds(spec, check_o);
            return emit(run_check(spec, L, R), check_o);
        }
        if (*realize) {
            const auto spec = load_spec(spec_path);
            const auto [L, R] = bounds(spec, real_o);
            return emit(run_realize(spec, L, R, real_o.serial ? Kernel::Serial : Kernel::Parallel), real_o);
        }
        if (*fp || *tri) {
            const auto spec = *fp ? free_product(gp, gn, gm, gr, gprec) : triangle_dyadic(gn, gm, ge, gprec);
            write_file(spec_out, dump(spec.to_json()));
            const auto [L, R] = bounds(spec, gal_o);
            return emit(run_pipeline(spec, L, R, gal_o.serial ? Kernel::Serial : Kernel::Parallel), gal_o);
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const SpecError& e) {
        std::cout << dump({{"overall", "refuted"}, {"error", e.what()}});
        return kExitRefuted;
    } catch (const ParseError& e) {
        std::cerr << "bad literal: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const FieldError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
