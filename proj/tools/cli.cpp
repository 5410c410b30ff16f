#include "cli.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <string>

#include "oneskel/errors.hpp"
#include "oneskel/homology.hpp"
#include "oneskel/localization.hpp"
#include "oneskel/momentdata.hpp"
#include "oneskel/skeleton.hpp"
#include "oneskel/spacefile.hpp"
#include "oneskel/toric.hpp"

namespace oneskel::cli {

namespace {

SpaceData load_valid(const std::string& path)
{
    SpaceData space = load_space(path);
    require_valid(space);
    return space;
}

LatticeVector choose_xi(const SpaceData& space, const std::string& xi, std::ostream& out)
{
    if (xi == "auto")
    {
        LatticeVector v = find_generic(space);
        out << "xi: " << to_string(v) << " (auto)\n";
        return v;
    }
    LatticeVector v = parse_lattice_vector(xi);
    require_generic(v, space);
    out << "xi: " << to_string(v) << "\n";
    return v;
}

std::string describe(const SkeletonSphere& s)
{
    std::string line = to_string(s.kind);
    line.resize(9, ' ');
    line += s.first;
    if (s.kind != SphereKind::fixed_surface)
        line += " " + s.second + " " + to_string(s.weight);
    if (!s.source.empty())
        line += " via " + s.source;
    return line;
}

int cmd_validate(const std::string& path, std::ostream& out)
{
    SpaceData space = load_space(path);
    ValidationReport report = validate(space);
    if (report.ok() && space.complexity() == 1)
    {
        try
        {
            for (const auto& p : space.points)
                if (!is_gkm(p))
                    check_non_gkm_structure(p, space);
            fat_edges(space);
        }
        catch (const Error& e)
        {
            report.violations.push_back({"structure", "", e.kind() + ": " + e.what()});
        }
    }
    if (report.ok())
    {
        out << "valid: torus_rank=" << space.torus_rank << " half_dim=" << space.half_dim
            << " points=" << space.points.size() << " surfaces=" << space.surfaces.size() << "\n";
        return ExitCode::ok;
    }
    for (const auto& v : report.violations)
        out << "violation [" << v.rule << "]" << (v.where.empty() ? "" : " " + v.where) << ": " << v.message << "\n";
    return ExitCode::domain_failure;
}

int cmd_pair(const std::string& path, const std::string& cls, const std::string& xi_text, std::ostream& out)
{
    SpaceData space = load_valid(path);
    std::ostringstream buf;
    LatticeVector xi = choose_xi(space, xi_text, buf);
    EqClass2 mu = cls == "c1" ? c1_class(space, xi) : omega_class(space, xi);
    PairingResult result = pair_with_cn1(space, mu, xi);
    buf << "class: " << cls << "\n";
    for (const auto& [id, value] : result.breakdown)
        buf << "  " << id << ": " << to_string(value) << "\n";
    buf << "pairing = " << to_string(result.value) << "\n";
    out << buf.str();
    return ExitCode::ok;
}

int cmd_skeleton(const std::string& path, bool verify, const std::string& xi_text, std::ostream& out)
{
    SpaceData space = load_valid(path);
    ToricOneSkeleton skel = assemble_skeleton(space);
    std::ostringstream buf;
    buf << "skeleton: " << skel.size() << " spheres (" << skel.counts.pre << " pre / " << skel.counts.fixed
        << " fixed / " << skel.counts.reduced << " reduced)\n";
    for (const auto& s : skel.spheres)
        buf << "  " << describe(s) << "\n";
    int code = ExitCode::ok;
    if (verify)
    {
        LatticeVector xi = choose_xi(space, xi_text, buf);
        VerificationReport report = verify_skeleton(space, skel, default_classes(space, xi), xi);
        for (const auto& c : report.checks)
            buf << "check " << c.name << ": " << to_string(c.lhs) << (c.pass ? " = " : " != ") << to_string(c.rhs)
                << (c.pass ? " pass" : " FAIL") << "\n";
        buf << "verify: " << (report.ok() ? "pass" : "FAIL") << "\n";
        if (!report.ok())
            code = ExitCode::domain_failure;
    }
    out << buf.str();
    return code;
}

int cmd_restrict(const std::string& path, const std::string& iota_text, const std::string& out_path,
                 std::ostream& out)
{
    std::string text = read_file(path);
    PolytopeFile file;
    try
    {
        file = parse_polytope_file(text);
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + (e.location().empty() ? "" : ": " + e.location()), e.detail());
    }
    IntMatrix iota;
    if (!iota_text.empty())
        iota = parse_matrix(iota_text);
    else if (file.iota)
        iota = *file.iota;
    else
        throw ParseError(path, "no subtorus given; pass --iota or add \"iota\" to the file");

    DelzantPolytope p = DelzantPolytope::from_vertices(file.vertices, file.dim);
    SpaceData space = restrict_to_subtorus(p, SubtorusEmbedding(iota));
    std::string doc = emit_space(space);
    if (out_path.empty())
        out << doc;
    else
        write_file(out_path, doc);
    return ExitCode::ok;
}

int cmd_betti(const std::string& path, const std::string& xi_text, std::size_t xi_count, std::ostream& out)
{
    SpaceData space = load_valid(path);
    if (xi_count <= 1)
    {
        std::ostringstream ignore;
        LatticeVector xi = choose_xi(space, xi_text, ignore);
        out << to_string(betti_numbers(space, xi)) << "\n";
        return ExitCode::ok;
    }
    std::ostringstream buf;
    std::string first;
    bool agree = true;
    for (const auto& xi : generic_directions(space, xi_count))
    {
        std::string profile = to_string(betti_numbers(space, xi));
        buf << "xi=" << to_string(xi) << ": " << profile << "\n";
        if (first.empty())
            first = profile;
        agree = agree && profile == first;
    }
    buf << (agree ? "profiles agree\n" : "profiles DIFFER across xi (data is not realizable)\n");
    out << buf.str();
    return agree ? ExitCode::ok : ExitCode::domain_failure;
}

int cmd_euler(const std::string& path, std::ostream& out)
{
    SpaceData space = load_valid(path);
    out << euler_characteristic(space) << "\n";
    return ExitCode::ok;
}

int cmd_monotone(const std::string& path, const std::string& xi_text, std::ostream& out)
{
    SpaceData space = load_valid(path);
    std::ostringstream ignore;
    LatticeVector xi = choose_xi(space, xi_text, ignore);
    ToricOneSkeleton skel = assemble_skeleton(space);
    MonotoneReport report = monotone_bound_check(space, skel, xi);
    out << report.summary() << "\n";
    return report.ok() ? ExitCode::ok : ExitCode::domain_failure;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fixed-point data of Hamiltonian torus actions: localization, toric one-skeletons, Betti numbers"};
    app.name("oneskel");
    app.require_subcommand(1);

    std::string path, cls = "omega", xi = "auto", iota, out_path;
    bool verify = false;
    std::size_t xi_count = 1;

    auto* validate = app.add_subcommand("validate", "Check the local validity rules of a space file");
    validate->add_option("file", path, "space file")->required();

    auto* pair = app.add_subcommand("pair", "Pair a class with c_{n-1} by localization");
    pair->add_option("file", path, "space file")->required();
    pair->add_option("--class", cls, "omega or c1")->check(CLI::IsMember({"omega", "c1"}));
    pair->add_option("--xi", xi, "circle direction, e.g. 1,-2, or auto");

    auto* skeleton = app.add_subcommand("skeleton", "Assemble the toric one-skeleton");
    skeleton->add_option("file", path, "space file")->required();
    skeleton->add_flag("--verify", verify, "check the skeleton identities");
    skeleton->add_option("--xi", xi, "circle direction for --verify, or auto");

    auto* toric = app.add_subcommand("toric", "Toric data generators");
    toric->require_subcommand(1);
    auto* restrict_cmd = toric->add_subcommand("restrict", "Restrict a Delzant polytope to a corank-one subtorus");
    restrict_cmd->add_option("file", path, "polytope file")->required();
    restrict_cmd->add_option("--iota", iota, "subtorus matrix rows, e.g. \"1,0;0,1;0,0\"");
    restrict_cmd->add_option("--out", out_path, "write the space file here instead of stdout");

    auto* betti = app.add_subcommand("betti", "Betti numbers from Morse indices");
    betti->add_option("file", path, "space file")->required();
    betti->add_option("--xi", xi, "circle direction, or auto");
    betti->add_option("--xi-count", xi_count, "compare profiles over this many generic directions");

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("file", path, "space file")->required();

    auto* monotone = app.add_subcommand("monotone", "Monotone b2 bound in dimension six");
    monotone->add_option("file", path, "space file")->required();
    monotone->add_option("--xi", xi, "circle direction, or auto");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::input_failure;
    }

    try
    {
        if (validate->parsed())
            return cmd_validate(path, out);
        if (pair->parsed())
            return cmd_pair(path, cls, xi, out);
        if (skeleton->parsed())
            return cmd_skeleton(path, verify, xi, out);
        if (restrict_cmd->parsed())
            return cmd_restrict(path, iota, out_path, out);
        if (betti->parsed())
            return cmd_betti(path, xi, xi_count, out);
        if (euler->parsed())
            return cmd_euler(path, out);
        if (monotone->parsed())
            return cmd_monotone(path, xi, out);
    }
    catch (const ParseError& e)
    {
        err << "error: ParseError: " << e.what() << "\n";
        return ExitCode::input_failure;
    }
    catch (const IoError& e)
    {
        err << "error: IoError: " << e.what() << "\n";
        return ExitCode::input_failure;
    }
    catch (const Error& e)
    {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return ExitCode::domain_failure;
    }
    return ExitCode::input_failure;
}

} // namespace oneskel::cli
