// Command-line front end over the C API.

#include <bredon/bredon.h>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct SystemDeleter {
    void operator()(bredon_system* s) const { bredon_system_free(s); }
};
struct ResultDeleter {
    void operator()(bredon_result* r) const { bredon_result_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { bredon_string_free(s); }
};
using SystemPtr = std::unique_ptr<bredon_system, SystemDeleter>;
using ResultPtr = std::unique_ptr<bredon_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(bredon_status status) {
    std::cerr << "error: " << bredon_last_error() << "\n";
    return static_cast<int>(status);
}

struct Settings {
    std::string input;
    std::string method = "auto";
    int max_degree = -1;
    uint64_t order_cap = 14400;
    std::string output = "json";
    bool dump_tables = false;
    bool cells = false;

    bredon_options options() const {
        bredon_options o;
        bredon_options_init(&o);
        o.method = method == "chain" ? BREDON_METHOD_CHAIN : method == "closed" ? BREDON_METHOD_CLOSED : BREDON_METHOD_AUTO;
        o.max_degree = max_degree;
        o.order_cap = order_cap;
        o.dump_tables = dump_tables ? 1 : 0;
        o.cells = cells ? 1 : 0;
        o.format = output == "text" ? BREDON_FORMAT_TEXT : BREDON_FORMAT_JSON;
        return o;
    }
};

void add_common(CLI::App* cmd, Settings& s, bool with_input = true) {
    if (with_input) {
        cmd->add_option("input", s.input, "Coxeter matrix as JSON {\"rank\": N, \"m\": [[...]]}, 0 = infinity")
            ->required()
            ->check(CLI::ExistingFile);
    }
    cmd->add_option("--output", s.output, "Report format")->check(CLI::IsMember({"json", "text"}));
}

void add_run_options(CLI::App* cmd, Settings& s) {
    cmd->add_option("--method", s.method, "Computation path")->check(CLI::IsMember({"auto", "chain", "closed"}));
    cmd->add_option("--max-degree", s.max_degree, "Highest degree reported (default: rank)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--order-cap", s.order_cap, "Largest spherical subgroup order realized by the chain path")
        ->check(CLI::PositiveNumber);
}

int load(const Settings& s, SystemPtr& system) {
    bredon_system* raw = nullptr;
    const bredon_status status = bredon_system_from_file(s.input.c_str(), &raw);
    system.reset(raw);
    return status == BREDON_OK ? 0 : report_error(status);
}

int print_string(bredon_status status, char* raw) {
    StringPtr text(raw);
    if (status != BREDON_OK) {
        return report_error(status);
    }
    std::cout << text.get();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bredon homology and equivariant K-homology of Davis complexes of Coxeter groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bredon_version()));

    Settings s;
    auto* classify = app.add_subcommand("classify", "Irreducible components, finiteness and spherical subsets");
    add_common(classify, s);

    auto* homology = app.add_subcommand("homology", "Bredon homology with representation-ring coefficients");
    add_common(homology, s);
    add_run_options(homology, s);
    homology->add_flag("--dump-tables", s.dump_tables, "Include character tables of all spherical subgroups");
    homology->add_flag("--cells", s.cells, "Include the cell list and differential blocks");

    auto* cells = app.add_subcommand("cells", "Cells of the Davis complex quotient and differential blocks");
    add_common(cells, s);
    cells->add_option("--order-cap", s.order_cap, "Largest spherical subgroup order realized")
        ->check(CLI::PositiveNumber);
    cells->add_flag("--dump-tables", s.dump_tables, "Print character tables instead of cells");

    auto* validate = app.add_subcommand("validate", "Check every corpus entry against its expected homology");
    validate->add_option("directory", s.input, "Directory of *.json corpus entries")->required();
    add_common(validate, s, false);
    add_run_options(validate, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : BREDON_INPUT_ERROR;
    }

    const bredon_options options = s.options();

    if (*validate) {
        char* text = nullptr;
        bredon_status verdict = BREDON_OK;
        const bredon_status status = bredon_validate_directory(s.input.c_str(), &options, &verdict, &text);
        if (const int rc = print_string(status, text); rc != 0) {
            return rc;
        }
        return static_cast<int>(verdict);
    }

    SystemPtr system;
    if (const int rc = load(s, system); rc != 0) {
        return rc;
    }

    if (*classify) {
        char* text = nullptr;
        const bredon_status status = bredon_classify_report(system.get(), options.format, &text);
        return print_string(status, text);
    }
    if (*cells) {
        char* text = nullptr;
        const bredon_status status = s.dump_tables ? bredon_tables_report(system.get(), &options, &text)
                                                   : bredon_cells_report(system.get(), &options, &text);
        return print_string(status, text);
    }

    bredon_result* raw = nullptr;
    const bredon_status status = bredon_compute(system.get(), &options, &raw);
    ResultPtr result(raw);
    if (status != BREDON_OK) {
        return report_error(status);
    }
    std::cout << bredon_result_report(result.get());
    return static_cast<int>(bredon_result_status(result.get()));
}
