#include "origami/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "origami/belyi.hpp"
#include "origami/cartography.hpp"
#include "origami/csmap.hpp"
#include "origami/document.hpp"
#include "origami/metric.hpp"
#include "origami/tiling.hpp"

namespace origami::cli {

namespace {

constexpr double kClosureTolerance = 1e-12;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path, Streams& io) {
    if (path == "-") return read_all(io.in);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("io_error", "cannot open '" + path + "'");
    return read_all(f);
}

void write_output(const std::string& path, const std::string& text, Streams& io) {
    if (path.empty() || path == "-") {
        io.out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("io_error", "cannot write '" + path + "'");
    f << text;
}

// 12 significant digits, no negative zero
std::string fmt(double x) {
    if (x == 0.0) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

std::vector<std::string> document_violations(const DessinDocument& doc) {
    std::vector<std::string> out;
    for (const auto& v : validate(doc.dessin)) out.push_back(std::string(to_string(v.kind)) + ": " + v.message);
    if (!out.empty()) return out;
    if (doc.metric) {
        for (auto& msg : validate_metric(doc.dessin, *doc.metric)) out.push_back("metric: " + msg);
        const std::size_t nf = cell_counts(doc.dessin).faces;
        for (std::size_t f = 0; f < nf; ++f) {
            const auto r = face_closure_residual(doc.dessin, *doc.metric, {CellKind::face, f});
            if (std::abs(r.position) > kClosureTolerance || std::abs(r.heading) > kClosureTolerance) {
                out.push_back("metric: face " + std::to_string(f) + " does not close (position residual " +
                              fmt(std::abs(r.position)) + ", heading residual " + fmt(r.heading) + ")");
            }
        }
    }
    if (doc.colors) {
        for (const auto& v : validate_tricoloring(tricolored_from(doc))) {
            out.push_back(std::string("tricoloring: ") + to_string(v.rule) + ": " + v.message);
        }
    }
    return out;
}

int cmd_validate(const std::string& input, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    const auto violations = document_violations(doc);
    for (const auto& v : violations) io.out << "violation: " << v << "\n";
    if (!violations.empty()) return failure;
    io.out << "valid\n";
    return ok;
}

int cmd_info(const std::string& input, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    CellStructure cs(doc.dessin);
    io.out << "V=" << cs.count(CellKind::vertex) << " E=" << cs.count(CellKind::edge)
           << " F=" << cs.count(CellKind::face) << " genus=" << euler_genus(doc.dessin) << "\n";
    std::map<std::size_t, std::size_t> histogram;
    for (const auto& f : cs.orbits(CellKind::face)) ++histogram[f.size()];
    io.out << "face_degrees";
    for (const auto& [deg, count] : histogram) io.out << " " << deg << ":" << count;
    io.out << "\n";
    return ok;
}

int cmd_refine(const std::string& input, const std::string& output, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    write_output(output, serialize_document(make_document(refine_2x2(doc.dessin))), io);
    return ok;
}

int cmd_subdivide(const std::string& input, const std::string& output, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    Dessin tiling = doc.dessin;
    std::vector<VertexLabel> labels;
    try {
        labels = corner_bipartition(tiling);
    } catch (const NonBipartite&) {
        io.err << "notice: auto-refined 2x2 (corner graph is not bipartite)\n";
        tiling = refine_2x2(tiling);
        labels = corner_bipartition(tiling);
    }
    write_output(output, serialize_document(make_document(diagonal_subdivision(tiling, labels))), io);
    return ok;
}

int cmd_barycentric(const std::string& input, const std::string& output, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    const TricoloredDessin result =
        doc.colors ? barycentric_subdivide(tricolored_from(doc)) : barycentric_subdivide(doc.dessin);
    write_output(output, serialize_document(make_document(result)), io);
    return ok;
}

int cmd_passport(const std::string& input, Streams& io) {
    const auto doc = parse_document(read_input(input, io));
    const Passport p = passport(tricolored_from(doc));
    io.out << to_string(p) << " genus=" << riemann_hurwitz_genus(p) << "\n";
    return ok;
}

struct MapEvalOptions {
    std::string spec = "square_cell";
    std::size_t grid = 8;
    double re_min = 0.0, re_max = 1.0, im_min = -1.0, im_max = 0.0;
    std::string out;
};

double grid_value(double lo, double hi, std::size_t i, std::size_t n) {
    if (n == 1) return lo;
    if (i + 1 == n) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

int cmd_map_eval(const MapEvalOptions& opt, Streams& io) {
    const auto spec = spec_by_name(opt.spec);
    if (!spec) throw InvalidArgument("unknown map spec '" + opt.spec + "'");
    if (opt.grid == 0) throw InvalidArgument("grid size must be positive");
    std::string csv = "t_re,t_im,z_re,z_im\n";
    for (std::size_t i = 0; i < opt.grid; ++i) {
        for (std::size_t j = 0; j < opt.grid; ++j) {
            const Complex t{grid_value(opt.re_min, opt.re_max, i, opt.grid),
                            grid_value(opt.im_max, opt.im_min, j, opt.grid)};
            const Complex z = cs_map(*spec, t);
            csv += fmt(t.real()) + "," + fmt(t.imag()) + "," + fmt(z.real()) + "," + fmt(z.imag()) + "\n";
        }
    }
    write_output(opt.out, csv, io);
    return ok;
}

std::vector<Complex> read_points(const std::string& text) {
    std::vector<Complex> pts;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 're,im'");
        try {
            std::size_t used_re = 0, used_im = 0;
            const std::string re_text = line.substr(0, comma), im_text = line.substr(comma + 1);
            const double re = std::stod(re_text, &used_re);
            const double im = std::stod(im_text, &used_im);
            if (im_text.find_first_not_of(" \t", used_im) != std::string::npos) {
                throw ParseError("line " + std::to_string(lineno) + ": trailing characters");
            }
            pts.emplace_back(re, im);
        } catch (const std::invalid_argument&) {
            if (lineno == 1) continue;  // header
            throw ParseError("line " + std::to_string(lineno) + ": not a number");
        } catch (const std::out_of_range&) {
            throw ParseError("line " + std::to_string(lineno) + ": number out of range");
        }
    }
    return pts;
}

int cmd_transform(const std::string& input, const std::string& output, Streams& io) {
    const auto pts = read_points(read_input(input, io));
    std::string csv = "z_re,z_im,Z_re,Z_im\n";
    for (const Complex& z : pts) {
        const Complex w = triangle_to_square(z);
        csv += fmt(z.real()) + "," + fmt(z.imag()) + "," + fmt(w.real()) + "," + fmt(w.imag()) + "\n";
    }
    write_output(output, csv, io);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams io{in, out, err};
    CLI::App app{"Square-tiled surfaces, tricolored dessins and Schwarz-Christoffel maps", "origami"};
    app.require_subcommand(1);

    std::string input = "-", output;
    MapEvalOptions map_opt;

    auto add_io = [&](CLI::App* sub, bool with_output) {
        sub->add_option("file", input, "input document ('-' for stdin)");
        if (with_output) sub->add_option("-o,--out", output, "output path (default stdout)");
    };
    auto* validate_cmd = app.add_subcommand("validate", "check a document; exit 1 on violations");
    add_io(validate_cmd, false);
    auto* info_cmd = app.add_subcommand("info", "cell counts, genus and face degrees");
    add_io(info_cmd, false);
    auto* refine_cmd = app.add_subcommand("refine", "replace every square by a 2x2 block");
    add_io(refine_cmd, true);
    auto* subdivide_cmd = app.add_subcommand("subdivide", "tricolored diagonal subdivision of a square tiling");
    add_io(subdivide_cmd, true);
    auto* bary_cmd = app.add_subcommand("barycentric", "barycentric subdivision of a triangulation");
    add_io(bary_cmd, true);
    auto* passport_cmd = app.add_subcommand("passport", "branching data of a tricolored dessin");
    add_io(passport_cmd, false);

    auto* map_cmd = app.add_subcommand("map-eval", "sample a Schwarz-Christoffel map on a grid");
    map_cmd->add_option("--spec", map_opt.spec, "square_cell | triangle_coord | square_coord")->required();
    map_cmd->add_option("--grid", map_opt.grid, "points per axis")->check(CLI::PositiveNumber);
    map_cmd->add_option("--re-min", map_opt.re_min);
    map_cmd->add_option("--re-max", map_opt.re_max);
    map_cmd->add_option("--im-min", map_opt.im_min);
    map_cmd->add_option("--im-max", map_opt.im_max);
    map_cmd->add_option("--out", map_opt.out, "CSV output path (default stdout)");

    auto* transform_cmd = app.add_subcommand("transform", "triangle coordinate to square coordinate on CSV points");
    transform_cmd->add_option("--in,file", input, "CSV of re,im points ('-' for stdin)");
    transform_cmd->add_option("--out,-o", output, "CSV output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return usage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(input, io);
        if (info_cmd->parsed()) return cmd_info(input, io);
        if (refine_cmd->parsed()) return cmd_refine(input, output, io);
        if (subdivide_cmd->parsed()) return cmd_subdivide(input, output, io);
        if (bary_cmd->parsed()) return cmd_barycentric(input, output, io);
        if (passport_cmd->parsed()) return cmd_passport(input, io);
        if (map_cmd->parsed()) return cmd_map_eval(map_opt, io);
        if (transform_cmd->parsed()) return cmd_transform(input, output, io);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return failure;
    }
    return usage;
}

}  // namespace origami::cli
