// organic: generate floor plans and buildings from the command line.
//
//   organic generate --width 9 --depth 9 --seed 42 --format ascii
//   organic batch --width 7 --depth 7 --rooms explicit:3 -n 1000 --seed 1
//   organic render building.json

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <organic/organic.hpp>

namespace {

using namespace organic;

enum ExitCode { kOk = 0, kValidation = 2, kGeneration = 3, kIo = 4 };

struct Flags {
    std::optional<int> width, depth, height, max_attempts, generations;
    std::optional<std::string> rooms, glass_sums, door_pass;
    std::optional<double> glass_prob;
    std::optional<std::uint64_t> seed;
    bool interior_walls_only = false;
    bool no_repair = false;
    std::string config_path;
    std::string format = "ascii";
    std::string out;
    int n = 1000;
    unsigned jobs = 1;
    std::string input;
};

void add_generation_flags(CLI::App& cmd, Flags& f) {
    cmd.add_option("--width", f.width, "Building width in blocks (>= 5)");
    cmd.add_option("--depth", f.depth, "Building depth in blocks (>= 5)");
    cmd.add_option("--height", f.height, "Wall courses between floor and roof (>= 3)");
    cmd.add_option("--seed", f.seed, "Seed (drawn from system entropy when omitted)");
    cmd.add_option("--rooms", f.rooms, "formula | explicit:<n>");
    cmd.add_option("--max-attempts", f.max_attempts, "Placement attempts per room");
    cmd.add_option("--ca-glass-prob", f.glass_prob, "Initial glass probability");
    cmd.add_option("--ca-generations", f.generations, "CA generations");
    cmd.add_option("--ca-glass-sums", f.glass_sums, "Neighbourhood sums that yield glass, e.g. 2,3");
    cmd.add_option("--door-pass", f.door_pass, "sweep | fixed-point");
    cmd.add_flag("--interior-walls-only", f.interior_walls_only,
                 "Only interior walls satisfy the door wall-adjacency rule");
    cmd.add_flag("--no-repair", f.no_repair, "Skip connectivity repair");
    cmd.add_option("--config", f.config_path, "JSON config file; flags override its values");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::ios_base::failure("cannot write '" + path + "'");
}

nlohmann::json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into a line/column for the message.
        int line = 0;
        int col = 0;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 0;
            } else {
                ++col;
            }
        }
        throw ParseError(origin + ": invalid JSON", line, col);
    }
}

GenerationConfig resolve_config(const Flags& f) {
    GenerationConfig c;
    if (!f.config_path.empty())
        c = config_from_json(parse_json_text(read_file(f.config_path), f.config_path));
    if (f.width) c.width = *f.width;
    if (f.depth) c.depth = *f.depth;
    if (f.height) c.height = *f.height;
    if (f.rooms) c.rooms = RoomCountPolicy::parse(*f.rooms);
    if (f.max_attempts) c.max_attempts = *f.max_attempts;
    if (f.glass_prob) c.ca.init_glass_probability = *f.glass_prob;
    if (f.generations) c.ca.generations = *f.generations;
    if (f.glass_sums) c.ca.glass_sums = CaParams::parse_sums(*f.glass_sums);
    if (f.door_pass) c.doors.pass = parse_door_pass(*f.door_pass);
    if (f.interior_walls_only) c.doors.exterior_walls_count = false;
    if (f.no_repair) c.repair = false;
    c.validate();
    return c;
}

std::uint64_t effective_seed(const Flags& f) {
    if (f.seed) return *f.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int cmd_generate(const Flags& f) {
    const GenerationConfig config = resolve_config(f);
    const std::uint64_t seed = effective_seed(f);
    std::cerr << "seed " << seed << "\n";
    GeneratedBuilding b;
    try {
        b = generate_building(config, seed);
    } catch (const GenerationError& e) {
        throw GenerationError(e.stage(), std::string(e.what()) + " [seed " + std::to_string(seed) + "]");
    }
    const std::string ascii = render_ascii(b.model.plan).to_string();
    const std::string json = export_json(b).dump(2) + "\n";
    if (f.format == "ascii") {
        if (f.out.empty()) std::cout << ascii;
        else write_file(f.out, ascii);
    } else if (f.format == "json") {
        if (f.out.empty()) std::cout << json;
        else write_file(f.out, json);
    } else {
        std::cout << ascii;
        if (f.out.empty()) std::cout << json;
        else write_file(f.out, json);
    }
    return kOk;
}

int cmd_batch(const Flags& f) {
    const GenerationConfig config = resolve_config(f);
    if (f.n < 1) throw ValidationError("-n must be >= 1");
    const std::uint64_t seed = effective_seed(f);
    BatchResult r = run_batch(config, f.n, seed, f.jobs);
    std::cout << format_summary_table(r.summary);
    if (!f.out.empty()) write_file(f.out, summary_to_json(r.summary).dump(2) + "\n");
    return kOk;
}

int cmd_render(const Flags& f) {
    const std::string text = read_file(f.input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        ImportedBuilding b = import_json(parse_json_text(text, f.input));
        std::cout << render_ascii(b.model.plan).to_string();
    } else {
        std::cout << render_ascii(parse_ascii(text)).to_string();
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Organic floor-plan and building generator"};
    app.require_subcommand(1);

    Flags f;
    auto* generate = app.add_subcommand("generate", "Generate one building");
    add_generation_flags(*generate, f);
    generate->add_option("--format", f.format, "ascii | json | both")
        ->check(CLI::IsMember({"ascii", "json", "both"}));
    generate->add_option("--out", f.out, "Output file (JSON when --format is json or both)");

    auto* batch = app.add_subcommand("batch", "Generate many buildings and summarise them");
    add_generation_flags(*batch, f);
    batch->add_option("-n", f.n, "Number of buildings");
    batch->add_option("--jobs", f.jobs, "Worker threads");
    batch->add_option("--out", f.out, "Write the JSON summary here");

    auto* render = app.add_subcommand("render", "Print the ASCII plan of a JSON or ASCII file");
    render->add_option("input", f.input, "Building JSON or ASCII layout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*generate) return cmd_generate(f);
        if (*batch) return cmd_batch(f);
        return cmd_render(f);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGeneration;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}
