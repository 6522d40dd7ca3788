// Command-line front end: computes the full Weitzenboeck machine output for
// one (algebra, highest weight) query or a batch of them.
//
// Exit codes: 0 ok, 2 malformed arguments, 3 non-dominant weight,
// 4 unsupported family/parameter, 5 internal consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "wzb/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotDominant = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitInternal = 5;

struct Args {
    std::string algebra;
    long n = -1;
    std::string weight;
    std::string sections;
    std::string format = "text";
    std::string batch;
};

void usage(std::ostream& os) {
    os << "usage: wzb --algebra {so|u|g2|spin7} [--n N] --weight c1,c2,...\n"
          "           [--sections s1,s2,...] [--format text|json]\n"
          "       wzb --batch FILE\n"
          "sections: decomposition weights twist kmatrix basis bochner curvature casimirs\n";
}

bool parse_long(const std::string& s, long& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stol(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_args(const std::vector<std::string>& argv, Args& args) {
    for (size_t i = 0; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        auto value = [&](std::string& slot) -> bool {
            if (i + 1 >= argv.size()) return false;
            slot = argv[++i];
            return true;
        };
        if (a == "--algebra") {
            if (!value(args.algebra)) return kExitUsage;
        } else if (a == "--n") {
            std::string v;
            if (!value(v) || !parse_long(v, args.n)) return kExitUsage;
        } else if (a == "--weight") {
            if (!value(args.weight)) return kExitUsage;
        } else if (a == "--sections") {
            if (!value(args.sections)) return kExitUsage;
        } else if (a == "--format") {
            if (!value(args.format)) return kExitUsage;
        } else if (a == "--batch") {
            if (!value(args.batch)) return kExitUsage;
        } else if (a == "--help" || a == "-h") {
            usage(std::cout);
            std::exit(kExitOk);
        } else {
            std::cerr << "unknown argument: " << a << "\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

int build_query(const Args& args, wzb::Query& q) {
    if (args.algebra == "so") {
        q.family = wzb::Family::SOodd; // resolved to odd/even by build_report
    } else if (args.algebra == "u") {
        q.family = wzb::Family::U;
    } else if (args.algebra == "g2") {
        q.family = wzb::Family::G2;
    } else if (args.algebra == "spin7") {
        q.family = wzb::Family::Spin7;
    } else {
        std::cerr << "unknown algebra: '" << args.algebra << "'\n";
        return args.algebra.empty() ? kExitUsage : kExitUnsupported;
    }

    bool needs_n = args.algebra == "so" || args.algebra == "u";
    if (needs_n && args.n < 0) {
        std::cerr << "--n is required for --algebra " << args.algebra << "\n";
        return kExitUsage;
    }
    if (!needs_n && args.n >= 0) {
        std::cerr << "--n is not accepted for --algebra " << args.algebra << "\n";
        return kExitUsage;
    }
    q.param = static_cast<int>(args.n);

    if (args.weight.empty()) {
        std::cerr << "--weight is required\n";
        return kExitUsage;
    }
    for (const std::string& part : split(args.weight, ',')) {
        long c = 0;
        if (!parse_long(part, c)) {
            std::cerr << "bad weight coordinate: '" << part << "'\n";
            return kExitUsage;
        }
        q.weight.push_back(c);
    }

    if (!args.sections.empty()) {
        q.sections.clear();
        for (const std::string& name : split(args.sections, ',')) {
            auto s = wzb::section_by_name(name);
            if (!s) {
                std::cerr << "unknown section: '" << name << "'\n";
                return kExitUsage;
            }
            q.sections.insert(*s);
        }
    }

    if (args.format == "json") {
        q.json = true;
    } else if (args.format != "text") {
        std::cerr << "unknown format: '" << args.format << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int expected_rank(const wzb::Query& q) {
    switch (q.family) {
        case wzb::Family::SOodd:
        case wzb::Family::SOeven: return q.param / 2;
        case wzb::Family::U: return q.param;
        case wzb::Family::G2: return 2;
        default: return 3;
    }
}

int run_query(const wzb::Query& q, bool batch_line, std::ostream& out) {
    try {
        if (q.family == wzb::Family::SOodd || q.family == wzb::Family::SOeven) {
            if (q.param < 3) throw wzb::Error("UnsupportedFamily", "so(n) needs n >= 3");
        }
        if (static_cast<int>(q.weight.size()) != expected_rank(q)) {
            std::cerr << "weight needs " << expected_rank(q) << " coordinates\n";
            return kExitUsage;
        }
        wzb::Report r = wzb::build_report(q);
        if (batch_line)
            out << wzb::render_json(r, false) << "\n";
        else if (q.json)
            out << wzb::render_json(r, true);
        else
            out << wzb::render_text(r);
        return kExitOk;
    } catch (const wzb::Error& e) {
        std::cerr << e.what() << "\n";
        if (e.kind() == "NotDominant") return kExitNotDominant;
        if (e.kind() == "UnsupportedFamily") return kExitUnsupported;
        return kExitInternal;
    }
}

int run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open batch file: " << path << "\n";
        return kExitUsage;
    }
    std::string line;
    int lineno = 0;
    std::ostringstream buffered;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> tokens;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        Args args;
        int rc = parse_args(tokens, args);
        wzb::Query q;
        if (rc == kExitOk) rc = build_query(args, q);
        if (rc == kExitOk) rc = run_query(q, true, buffered);
        if (rc != kExitOk) {
            std::cerr << "batch line " << lineno << " failed\n";
            return rc;
        }
    }
    std::cout << buffered.str();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> raw(argv + 1, argv + argc);
    if (raw.empty()) {
        usage(std::cerr);
        return kExitUsage;
    }
    Args args;
    int rc = parse_args(raw, args);
    if (rc != kExitOk) return rc;

    if (!args.batch.empty()) return run_batch(args.batch);

    wzb::Query q;
    rc = build_query(args, q);
    if (rc != kExitOk) return rc;
    return run_query(q, false, std::cout);
}
