// frcode: construct, verify and exercise fractional repetition codes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 integrity failure.

#include "frc/bounds.hpp"
#include "frc/code.hpp"
#include "frc/constructions.hpp"
#include "frc/designs.hpp"
#include "frc/error.hpp"
#include "frc/json_io.hpp"
#include "frc/mds.hpp"
#include "frc/simulator.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace frc;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIntegrity = 3 };

struct Globals {
    std::string out;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

Json read_json(const std::string& path)
{
    std::ifstream in;
    std::istream* src = &std::cin;
    if (path != "-") {
        in.open(path);
        if (!in)
            throw ParameterError("cannot open " + path);
        src = &in;
    }
    try {
        return Json::parse(*src);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

void write_text_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out << text;
}

void write_bytes(const fs::path& path, const Bytes& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

Bytes read_bytes(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParameterError("cannot open " + path.string());
    return Bytes(std::istreambuf_iterator<char>(in), {});
}

// Sends a result to --out or stdout, as JSON or as the given text.
void emit(const Globals& g, const Json& j, const std::string& text = {})
{
    const std::string body = (g.format == "text" && !text.empty()) ? text : j.dump(2) + "\n";
    if (!g.out.empty())
        write_text_file(g.out, body);
    else if (!g.quiet)
        std::cout << body;
}

void note(const Globals& g, const std::string& msg)
{
    if (!g.quiet)
        std::cerr << msg << "\n";
}

// --- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string type;
    int n = 0;
    int d = 0;
    int v = 0;
    std::string design;
};

int cmd_construct(const Globals& g, const ConstructArgs& a)
{
    auto design = [&]() -> SteinerSystem {
        if (!a.design.empty())
            return steiner_from_json(read_json(a.design));
        return a.v == 7 ? fano_plane() : steiner_triple_system(a.v);
    };

    FrCode code;
    if (a.type == "complete")
        code = complete_graph_code(a.n);
    else if (a.type == "regular")
        code = regular_graph_code(a.n, a.d, g.seed);
    else if (a.type == "steiner-direct")
        code = direct_code(design());
    else if (a.type == "steiner-transpose")
        code = transpose_code(design());
    else if (a.type == "grid")
        code = grid_code();
    else
        throw ParameterError("unknown construction type \"" + a.type + "\"");

    std::ostringstream text;
    text << "n=" << code.n() << " d=" << code.d() << " rho=" << code.rho() << " theta=" << code.theta() << "\n";
    for (NodeId i = 1; i <= code.n(); ++i) {
        text << "v" << i << ":";
        for (PacketId p : code.node(i))
            text << ' ' << p;
        text << "\n";
    }
    emit(g, code_to_json(code), text.str());
    return kOk;
}

// --- steiner --------------------------------------------------------------

int cmd_steiner(const Globals& g, int v, const std::string& check)
{
    if (!check.empty()) {
        const auto sys = steiner_from_json(read_json(check));
        const auto report = validate_steiner(sys);
        emit(g, Json{{"ok", report.ok()}, {"violations", report.violations}});
        return report.ok() ? kOk : kVerifyFailed;
    }
    emit(g, steiner_to_json(v == 7 ? fano_plane() : steiner_triple_system(v)));
    return kOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& path)
{
    const auto code = code_from_json(read_json(path));
    const auto validation = validate_fr(code);
    Json j{{"ok", validation.ok()}, {"violations", validation.violations}};
    std::ostringstream text;
    if (!validation.ok()) {
        text << "INVALID\n";
        for (const auto& v : validation.violations)
            text << "  " << v << "\n";
        emit(g, j, text.str());
        return kVerifyFailed;
    }

    const auto goodness = is_universally_good(code);
    Json rows = Json::array();
    text << "n=" << code.n() << " d=" << code.d() << " rho=" << code.rho() << " theta=" << code.theta() << "\n";
    text << std::setw(4) << "k" << std::setw(8) << "rate" << std::setw(8) << "C_MBR" << std::setw(8) << "margin"
         << "\n";
    for (int k = 1; k <= code.d(); ++k) {
        const auto cap = c_mbr(code.n(), k, code.d());
        const auto margin = goodness.margins[static_cast<std::size_t>(k - 1)];
        rows.push_back({{"k", k}, {"rate", cap + margin}, {"c_mbr", cap}, {"margin", margin}});
        text << std::setw(4) << k << std::setw(8) << cap + margin << std::setw(8) << cap << std::setw(8)
             << std::showpos << margin << std::noshowpos << "\n";
    }
    text << (goodness.good ? "universally good\n" : "NOT universally good\n");
    j["rates"] = std::move(rows);
    j["universally_good"] = goodness.good;
    j["ok"] = goodness.good;
    emit(g, j, text.str());
    return goodness.good ? kOk : kVerifyFailed;
}

// --- bounds / capacity-search ---------------------------------------------

struct BoundsArgs {
    int n = 0;
    int k = 0;
    int d = 0;
    int rho = 0;
    double budget_seconds = 60.0;
    int max_cells = SearchBudget{}.max_cells;
};

std::string report_text(const CapacityReport& r)
{
    std::ostringstream os;
    os << "(n,k,d,rho)=(" << r.params.n << "," << r.params.k << "," << r.params.d << "," << r.params.rho << ")\n"
       << "averaging bound: " << r.averaging << "\n"
       << "recursive bound: " << r.recursive << "\n";
    if (r.best_known)
        os << "best construction: " << r.best_known->value << "\n";
    if (r.search)
        os << "search: " << r.search->value << (r.search->exact ? " (exact)" : " (lower bound, budget exhausted)")
           << "\n";
    return os.str();
}

int cmd_bounds(const Globals& g, const BoundsArgs& a, bool search)
{
    const DssParams params{a.n, a.k, a.d, a.rho};
    std::optional<SearchBudget> budget;
    if (search)
        budget = SearchBudget{a.budget_seconds, a.max_cells};
    const auto report = capacity_report(params, budget);
    emit(g, capacity_report_to_json(report), report_text(report));
    return kOk;
}

// --- encode / decode ------------------------------------------------------

struct EncodeArgs {
    std::string code;
    std::string input;
    int m = 0;
    int k = 0;
};

int cmd_encode(const Globals& g, const EncodeArgs& a)
{
    if (g.out.empty())
        throw ParameterError("encode needs --out DIR");
    const auto code = code_from_json(read_json(a.code));
    if (const auto r = validate_fr(code); !r.ok())
        throw InvalidDesignError("FR code does not validate: " + r.violations.front());

    const int k = a.k > 0 ? a.k : code.d();
    const int guaranteed = rate(code, k).value;
    const int m = a.m > 0 ? a.m : guaranteed;
    if (m > guaranteed)
        throw FileTooLargeError("m=" + std::to_string(m) + " exceeds rate " + std::to_string(guaranteed) +
                                " at k=" + std::to_string(k));

    const Bytes content = read_bytes(a.input);
    const std::size_t packet_len = std::max<std::size_t>(1, (content.size() + static_cast<std::size_t>(m) - 1) /
                                                                static_cast<std::size_t>(m));
    SourceFile file{m, packet_len, {}};
    for (int i = 0; i < m; ++i) {
        Bytes p(packet_len, 0);
        const std::size_t begin = static_cast<std::size_t>(i) * packet_len;
        for (std::size_t b = 0; b < packet_len && begin + b < content.size(); ++b)
            p[b] = content[begin + b];
        file.data.push_back(std::move(p));
    }
    const auto coded = mds_encode(file, code.theta());

    const fs::path root(g.out);
    fs::create_directories(root);
    Json manifest{{"m", m},
                  {"k", k},
                  {"theta", code.theta()},
                  {"packet_len", packet_len},
                  {"file_len", content.size()},
                  {"code", code_to_json(code)}};
    for (NodeId i = 1; i <= code.n(); ++i) {
        const fs::path dir = root / ("node_" + std::to_string(i));
        fs::create_directories(dir);
        for (PacketId p : code.node(i)) {
            const auto& packet = coded[static_cast<std::size_t>(p - 1)];
            const std::string stem = "packet_" + std::to_string(p);
            write_bytes(dir / (stem + ".bin"), packet.payload);
            write_text_file(dir / (stem + ".json"),
                            packet_header_to_json({p, m, code.theta(), packet_len}).dump() + "\n");
        }
        const Json node_manifest{{"node", i},
                                 {"m", m},
                                 {"theta", code.theta()},
                                 {"packet_len", packet_len},
                                 {"file_len", content.size()},
                                 {"packets", code.node(i)}};
        write_text_file(dir / "manifest.json", node_manifest.dump(2) + "\n");
    }
    write_text_file(root / "manifest.json", manifest.dump(2) + "\n");
    note(g, "encoded " + std::to_string(content.size()) + " bytes into " + std::to_string(code.theta()) +
                " packets of " + std::to_string(packet_len) + " bytes on " + std::to_string(code.n()) + " nodes");
    return kOk;
}

struct DecodeArgs {
    std::string dir;
    std::vector<int> nodes;
};

int cmd_decode(const Globals& g, const DecodeArgs& a)
{
    if (g.out.empty())
        throw ParameterError("decode needs --out FILE");
    if (a.nodes.empty())
        throw ParameterError("decode needs --nodes");

    std::optional<Json> header;
    std::vector<CodedPacket> packets;
    for (int node : a.nodes) {
        const fs::path dir = fs::path(a.dir) / ("node_" + std::to_string(node));
        const auto manifest = read_json((dir / "manifest.json").string());
        if (!header)
            header = manifest;
        for (const char* key : {"m", "theta", "packet_len", "file_len"})
            if (manifest.at(key) != header->at(key))
                throw ParameterError("node " + std::to_string(node) + " manifest disagrees on " + key);
        for (int p : manifest.at("packets").get<std::vector<int>>()) {
            const std::string stem = "packet_" + std::to_string(p);
            const auto side = packet_header_from_json(read_json((dir / (stem + ".json")).string()));
            auto payload = read_bytes(dir / (stem + ".bin"));
            if (side.index != p || payload.size() != side.packet_len)
                throw ParameterError("packet " + std::to_string(p) + " on node " + std::to_string(node) +
                                     " does not match its sidecar");
            packets.push_back({p, std::move(payload)});
        }
    }
    const int m = header->at("m").get<int>();
    const int theta = header->at("theta").get<int>();
    const auto file_len = header->at("file_len").get<std::size_t>();
    const auto file = mds_decode(packets, m, theta);

    Bytes content;
    for (const auto& p : file.data)
        content.insert(content.end(), p.begin(), p.end());
    content.resize(file_len);
    write_bytes(g.out, content);
    note(g, "decoded " + std::to_string(file_len) + " bytes");
    return kOk;
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
    std::string code;
    std::string script;
    int random_failures = 0;
    int k = 0;
    int m = 0;
    std::size_t packet_len = 64;
};

int cmd_simulate(const Globals& g, const SimulateArgs& a)
{
    const auto code = code_from_json(read_json(a.code));
    if (const auto r = validate_fr(code); !r.ok())
        throw InvalidDesignError("FR code does not validate: " + r.violations.front());
    const int k = a.k > 0 ? a.k : code.d();
    const int m = a.m > 0 ? a.m : rate(code, k).value;
    const std::uint64_t seed = g.seed.value_or(1);
    const auto file = random_file(m, a.packet_len, seed);

    std::vector<ScenarioEvent> script;
    if (!a.script.empty())
        script = script_from_json(read_json(a.script));
    else
        script = random_script(code, k, a.random_failures, seed);

    const auto report = run_scenario(code, file, k, script);
    auto j = scenario_report_to_json(report);
    j["k"] = k;
    j["m"] = m;
    std::ostringstream text;
    text << report.events.size() << " events, " << report.total_transferred << " packets transferred, "
         << report.reads_ok << "/" << report.reads << " reads ok, integrity "
         << (report.integrity_ok ? "ok" : "FAILED") << "\n";
    emit(g, j, text.str());
    return report.ok() ? kOk : kIntegrity;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractional repetition codes: construction, verification, bounds and repair simulation"};
    app.require_subcommand(1, 1);

    Globals g;
    app.add_option("--out", g.out, "Output file (directory for encode)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for randomized operations");
    app.add_flag("--quiet", g.quiet, "Suppress stdout and progress messages");

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "Build an FR code");
    c->add_option("--type", construct.type, "complete|regular|steiner-direct|steiner-transpose|grid")->required();
    c->add_option("--n", construct.n, "Node count");
    c->add_option("--d", construct.d, "Node degree");
    c->add_option("--v", construct.v, "Steiner triple system order");
    c->add_option("--design", construct.design, "Steiner system JSON instead of --v");

    int steiner_v = 7;
    std::string steiner_check;
    auto* st = app.add_subcommand("steiner", "Emit or check a Steiner system S(2,3,v)");
    st->add_option("--v", steiner_v, "Point count (1 or 3 mod 6)");
    st->add_option("--check", steiner_check, "Validate a Steiner JSON document instead");

    std::string verify_path;
    auto* ver = app.add_subcommand("verify", "Validate a code and check universal goodness");
    ver->add_option("code", verify_path, "FR code JSON ('-' for stdin)")->required();

    BoundsArgs bounds;
    auto* b = app.add_subcommand("bounds", "Upper bounds on the FR capacity");
    auto* cs = app.add_subcommand("capacity-search", "Exhaustive FR capacity search for tiny parameters");
    for (auto* sub : {b, cs}) {
        sub->add_option("--n", bounds.n)->required();
        sub->add_option("--k", bounds.k)->required();
        sub->add_option("--d", bounds.d)->required();
        sub->add_option("--rho", bounds.rho)->required();
    }
    cs->add_option("--budget-seconds", bounds.budget_seconds, "Wall-clock budget");
    cs->add_option("--max-cells", bounds.max_cells, "Guard on n*theta");

    EncodeArgs encode;
    auto* enc = app.add_subcommand("encode", "Encode a file onto per-node packet directories");
    enc->add_option("--code", encode.code, "FR code JSON")->required();
    enc->add_option("--in", encode.input, "Input file")->required();
    enc->add_option("--m", encode.m, "Source packets (default: rate at k)");
    enc->add_option("--k", encode.k, "User contact degree (default: d)");

    DecodeArgs decode;
    auto* dec = app.add_subcommand("decode", "Reconstruct a file from node directories");
    dec->add_option("--dir", decode.dir, "Directory written by encode")->required();
    dec->add_option("--nodes", decode.nodes, "Nodes to contact")->delimiter(',')->required();

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Run a failure/repair/read scenario");
    s->add_option("--code", sim.code, "FR code JSON")->required();
    auto* script_opt = s->add_option("--script", sim.script, "Scenario script JSON");
    s->add_option("--random-failures", sim.random_failures, "Random fail/repair/read cycles")->excludes(script_opt);
    s->add_option("--k", sim.k, "User contact degree (default: d)");
    s->add_option("--m", sim.m, "File size in packets (default: rate at k)");
    s->add_option("--packet-len", sim.packet_len, "Bytes per packet");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*c)
            return cmd_construct(g, construct);
        if (*st)
            return cmd_steiner(g, steiner_v, steiner_check);
        if (*ver)
            return cmd_verify(g, verify_path);
        if (*b)
            return cmd_bounds(g, bounds, false);
        if (*cs)
            return cmd_bounds(g, bounds, true);
        if (*enc)
            return cmd_encode(g, encode);
        if (*dec)
            return cmd_decode(g, decode);
        if (*s)
            return cmd_simulate(g, sim);
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
