#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtower/borromean.hpp"
#include "dtower/complex.hpp"
#include "dtower/dinvariant.hpp"
#include "dtower/grading.hpp"
#include "dtower/models.hpp"
#include "dtower/serialize.hpp"

namespace {

using namespace dtower;

int exit_code_for(const DtError& e) {
    switch (e.code()) {
        case Errc::kParse: return 2;
        case Errc::kInvalidInput: return 3;
        case Errc::kSliceRank:
        case Errc::kGradingConflict:
        case Errc::kUngradedTouched: return 4;
        default: return 1;
    }
}

std::vector<KnotComplex> resolve_inputs(const std::vector<std::string>& files,
                                        const std::vector<std::string>& presets,
                                        std::size_t needed) {
    if (files.size() + presets.size() != needed) {
        std::ostringstream os;
        os << "expected " << needed << " input(s) between files and --preset, got "
           << files.size() + presets.size();
        throw DtError(Errc::kParse, os.str());
    }
    std::vector<KnotComplex> out;
    for (const auto& p : presets) out.push_back(preset(p));
    for (const auto& f : files) out.push_back(load_complex_file(f));
    return out;
}

void require_valid(const KnotComplex& c) {
    ValidationReport r = validate_complex(c);
    if (!r.ok())
        throw DtError(Errc::kInvalidInput, "'" + c.name() + "' failed validation\n" + r.summary());
}

void print_adjacency(std::ostream& os, const KnotComplex& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
        os << "[" << c.generator(k).id << "]";
        for (int t : c.targets(k)) os << c.generator(std::size_t(t)).id << ",";
        os << "\n";
    }
}

void print_filtrations(std::ostream& os, const KnotComplex& c) {
    for (const auto& g : c.generators())
        os << "F(" << g.id << ") = (" << g.filt.i << "," << g.filt.j << ")\n";
}

void print_d_lines(std::ostream& os, const DInvariantReport& r) {
    os << "d(S^3_{+1}(K)) = " << r.d_plus << "\n";
    os << "d(S^3_{-1}(K)) = " << r.d_minus << "\n";
}

std::string multiset_text(const std::map<int, int>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [gr, cnt] : m) {
        if (!first) os << ", ";
        os << gr << ":" << cnt;
        first = false;
    }
    os << "}";
    return os.str();
}

int cmd_d(const std::vector<std::string>& files, const std::vector<std::string>& presets) {
    auto inputs = resolve_inputs(files, presets, 1);
    require_valid(inputs[0]);
    print_d_lines(std::cout, d_invariants(inputs[0]));
    return 0;
}

int cmd_sum(const std::vector<std::string>& files, const std::vector<std::string>& presets,
            const std::string& out_path) {
    auto inputs = resolve_inputs(files, presets, 2);
    require_valid(inputs[0]);
    require_valid(inputs[1]);
    KnotComplex t = tensor_product(inputs[0], inputs[1]);
    save_complex_file(t, out_path);
    std::cout << "Created knot " << t.name() << " having adjacency list\n";
    print_adjacency(std::cout, t);
    std::cout << "and bifiltrations\n";
    print_filtrations(std::cout, t);
    return 0;
}

int cmd_validate(const std::vector<std::string>& files, const std::vector<std::string>& presets) {
    auto inputs = resolve_inputs(files, presets, 1);
    ValidationReport r = validate_complex(inputs[0]);
    std::cout << r.summary() << "\n";
    return r.ok() ? 0 : 3;
}

int cmd_mirror(const std::vector<std::string>& files, const std::vector<std::string>& presets,
               const std::string& out_path) {
    auto inputs = resolve_inputs(files, presets, 1);
    require_valid(inputs[0]);
    save_complex_file(mirror(inputs[0]), out_path);
    return 0;
}

int cmd_info(const std::vector<std::string>& files, const std::vector<std::string>& presets) {
    auto inputs = resolve_inputs(files, presets, 1);
    const KnotComplex& c = inputs[0];
    std::cout << "knot " << c.name() << "\n";
    std::cout << "coefficients: Z/2\n";
    std::cout << "adjacency list\n";
    print_adjacency(std::cout, c);
    std::cout << "bifiltration levels\n";
    print_filtrations(std::cout, c);
    std::cout << "symmetric about i=j: " << (symmetry_check(c) ? "yes" : "no (warning)") << "\n";
    return 0;
}

int cmd_borromean(int genus, int sign) {
    BorromeanReport r = verify_borromean(genus, sign);
    std::cout << "towers: " << multiset_text(r.multiset) << ", d_b = " << r.d_b << ", "
              << (r.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "note: " << r.note << "\n";
    if (!r.pass) {
        std::cout << "expected " << multiset_text(r.expected) << " with d_b = " << r.d_b_expected
                  << "\n";
        return 5;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Interactive session
// ---------------------------------------------------------------------------

struct ReplQuit {};

long read_long(std::istream& in) {
    long v;
    while (!(in >> v)) {
        if (in.eof()) throw ReplQuit{};
        in.clear();
        std::string junk;
        in >> junk;
        std::cout << "please enter a number\n";
    }
    return v;
}

void print_main_menu(std::ostream& os) {
    os << "---------------------------------\n";
    os << "   Main menu.\n";
    os << "(1) Enter a new knot\n";
    os << "(2) View current knots\n";
    os << "(3) Select a knot\n";
    os << "(4) Connect-sum two knots\n";
    os << "(0) Quit\n";
    os << "----------------------------------\n";
}

void list_knots(std::ostream& os, const std::vector<KnotComplex>& knots) {
    os << "Current knots are:\n(index, name)\n------------\n";
    for (std::size_t k = 0; k < knots.size(); ++k)
        os << "(" << k << ", " << knots[k].name() << ")\n";
}

void repl_enter_knot(std::istream& in, std::ostream& os, std::vector<KnotComplex>& knots) {
    os << "Enter the name of your knot\n";
    std::string name;
    in >> std::ws;
    if (!std::getline(in, name)) throw ReplQuit{};

    os << "Enter the knot vertex keys (non-neg integers).  input -1 to stop\n";
    std::vector<std::string> keys;
    for (;;) {
        long v = read_long(in);
        if (v < 0) break;
        keys.push_back(std::to_string(v));
    }
    os << "entered vertices ";
    for (const auto& k : keys) os << k << ",";
    os << "\n";

    os << "enter the adjacency lists (type a vertex key, press enter,\n"
       << "\tcontinue. input -1 to stop)\n";
    std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
    for (const auto& k : keys) {
        os << "successors of " << k << ":\n";
        std::vector<std::string> tos;
        for (;;) {
            long v = read_long(in);
            if (v < 0) break;
            tos.push_back(std::to_string(v));
        }
        if (!tos.empty()) arrows.emplace_back(k, std::move(tos));
    }

    os << "enter the bifiltration levels\n"
       << "(type i value, press enter, then type j value, then press enter)\n";
    std::vector<KnotComplex::GenSpec> gens;
    for (const auto& k : keys) {
        os << "F_i[" << k << "] = ";
        long i = read_long(in);
        os << "F_j[" << k << "] = ";
        long j = read_long(in);
        os << "\n";
        gens.push_back({k, int(i), int(j), std::nullopt});
    }

    try {
        KnotComplex c = KnotComplex::create(name, gens, arrows);
        os << "added knot " << name << " with adjacency list\n";
        print_adjacency(os, c);
        os << "and bifiltration levels\n";
        print_filtrations(os, c);
        knots.push_back(std::move(c));
    } catch (const DtError& e) {
        os << "could not add knot: " << e.what() << "\n";
    }
}

void repl_knot_actions(std::istream& in, std::ostream& os, KnotComplex& c) {
    os << "What would you like to do with your knot complex?\n"
       << "(1) Print its adjacency list\n"
       << "(2) Show its bifiltration levels\n"
       << "(3) Check if it defines a complex\n"
       << "(4) Check if it is filtered\n"
       << "(5) Compute its homology\n"
       << "(6) Compute d invariants!\n"
       << "(7) Nothing--bring me back to the main menu\n";
    long action = read_long(in);
    ValidationReport r = validate_complex(c);
    switch (action) {
        case 1: print_adjacency(os, c); break;
        case 2: print_filtrations(os, c); break;
        case 3:
            os << (r.is_complex ? "This graph defines a complex.\n"
                                : "This graph does NOT define a complex.\n");
            if (!r.is_complex) os << r.summary() << "\n";
            break;
        case 4:
            os << (r.is_filtered ? "The complex is filtered.\n" : "The complex is NOT filtered.\n");
            if (!r.is_filtered) os << r.summary() << "\n";
            break;
        case 5:
            try {
                y_slice(c);
                os << "y-slice homology rank: 1\n";
            } catch (const DtError& e) {
                os << e.what() << "\n";
            }
            break;
        case 6:
            try {
                require_valid(c);
                print_d_lines(os, d_invariants(c));
            } catch (const DtError& e) {
                os << e.what() << "\n";
            }
            break;
        default: break;
    }
}

int repl(std::istream& in, std::ostream& os) {
    os << "*****************************************************************\n"
       << "Welcome to the d invariant calculator!\n\n"
       << "This program computes the d invariants of +/-1 surgery on a knot\n"
       << "*****************************************************************\n";
    std::vector<KnotComplex> knots;
    try {
        for (;;) {
            print_main_menu(os);
            long choice = read_long(in);
            if (choice == 0) {
                os << "Really quit d calculator? (y/n) ";
                std::string answer;
                if (!(in >> answer) || answer == "y" || answer == "Y") break;
                continue;
            }
            switch (choice) {
                case 1: repl_enter_knot(in, os, knots); break;
                case 2: list_knots(os, knots); break;
                case 3: {
                    list_knots(os, knots);
                    os << "input an index\n";
                    long idx = read_long(in);
                    if (idx < 0 || std::size_t(idx) >= knots.size()) {
                        os << "no knot with index " << idx << "\n";
                        break;
                    }
                    repl_knot_actions(in, os, knots[std::size_t(idx)]);
                    break;
                }
                case 4: {
                    list_knots(os, knots);
                    os << "Enter the indices of the two knots to add\n";
                    long a = read_long(in);
                    long b = read_long(in);
                    if (a < 0 || b < 0 || std::size_t(a) >= knots.size() ||
                        std::size_t(b) >= knots.size()) {
                        os << "invalid indices\n";
                        break;
                    }
                    os << "Computing tensor product...\n";
                    auto start = std::chrono::steady_clock::now();
                    try {
                        KnotComplex t =
                            tensor_product(knots[std::size_t(a)], knots[std::size_t(b)]);
                        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                        os << "Computation took " << secs / 60 << "min" << secs % 60 << "sec.\n";
                        os << "Created knot " << t.name() << " having adjacency list\n";
                        print_adjacency(os, t);
                        os << "and bifiltrations\n";
                        print_filtrations(os, t);
                        knots.push_back(std::move(t));
                    } catch (const DtError& e) {
                        os << e.what() << "\n";
                    }
                    break;
                }
                default: os << "invalid input\n"; break;
            }
        }
    } catch (const ReplQuit&) {
        // EOF on stdin ends the session.
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"correction terms of +/-1 surgeries from bifiltered knot complexes"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::vector<std::string> presets;
    std::string out_path;
    int genus = 1;
    int sign = -1;

    auto add_inputs = [&](CLI::App* sub, int max_files) {
        sub->add_option("file", files, "complex document(s)")->expected(0, max_files);
        sub->add_option("--preset", presets, "builtin complex: unknot|rht|lht|t34|fig8|c21-model");
    };

    CLI::App* sub_d = app.add_subcommand("d", "compute d(S^3_{+1}) and d(S^3_{-1})");
    add_inputs(sub_d, 1);
    CLI::App* sub_sum = app.add_subcommand("sum", "connect-sum two complexes");
    add_inputs(sub_sum, 2);
    sub_sum->add_option("-o,--output", out_path, "output document")->required();
    CLI::App* sub_validate = app.add_subcommand("validate", "run the structural checks");
    add_inputs(sub_validate, 1);
    CLI::App* sub_mirror = app.add_subcommand("mirror", "write the mirror complex");
    add_inputs(sub_mirror, 1);
    sub_mirror->add_option("-o,--output", out_path, "output document")->required();
    CLI::App* sub_info = app.add_subcommand("info", "print adjacency and filtration levels");
    add_inputs(sub_info, 1);
    CLI::App* sub_borromean = app.add_subcommand("borromean", "verify the genus-g surgery towers");
    sub_borromean->add_option("-g,--genus", genus, "genus, 1..3")->required()->check(CLI::Range(1, 3));
    sub_borromean->add_option("-s,--sign", sign, "surgery sign, +1 or -1")
        ->required()
        ->check(CLI::IsMember({1, -1}));
    app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_d->parsed()) return cmd_d(files, presets);
        if (sub_sum->parsed()) return cmd_sum(files, presets, out_path);
        if (sub_validate->parsed()) return cmd_validate(files, presets);
        if (sub_mirror->parsed()) return cmd_mirror(files, presets, out_path);
        if (sub_info->parsed()) return cmd_info(files, presets);
        if (sub_borromean->parsed()) return cmd_borromean(genus, sign);
        return repl(std::cin, std::cout);
    } catch (const DtError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
