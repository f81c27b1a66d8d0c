#include <bredon/bredon.h>
#include <bredon/error.hpp>
#include <bredon/report.hpp>

#include <cstdlib>
#include <cstring>
#include <new>

struct bredon_system {
    bredon::CoxeterMatrix matrix;
};

struct bredon_result {
    bredon::RunReport run;
    std::string report;
    // Torsion coefficients rendered once so the C strings stay valid.
    std::vector<std::vector<std::string>> torsion;
};

namespace {

thread_local std::string last_error;

bredon_status fail(bredon_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Maps exceptions from the core onto status codes.
template <class F>
bredon_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const bredon::InputError& e) {
        return fail(BREDON_INPUT_ERROR, e.what());
    } catch (const bredon::PreconditionError& e) {
        return fail(BREDON_INPUT_ERROR, e.what());
    } catch (const bredon::ResourceError& e) {
        return fail(BREDON_RESOURCE_CAP, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(BREDON_INPUT_ERROR, std::string("malformed JSON: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(BREDON_RESOURCE_CAP, "out of memory");
    } catch (const std::exception& e) {
        return fail(BREDON_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(BREDON_INTERNAL_ERROR, "unknown error");
    }
}

bredon::RunOptions convert(const bredon_options* options) {
    bredon_options defaults;
    bredon_options_init(&defaults);
    const bredon_options& o = options ? *options : defaults;
    bredon::RunOptions run;
    switch (o.method) {
        case BREDON_METHOD_AUTO: run.method = bredon::MethodChoice::Auto; break;
        case BREDON_METHOD_CHAIN: run.method = bredon::MethodChoice::Chain; break;
        case BREDON_METHOD_CLOSED: run.method = bredon::MethodChoice::Closed; break;
        default: throw bredon::InputError("unknown method " + std::to_string(static_cast<int>(o.method)));
    }
    if (o.max_degree >= 0) {
        run.max_degree = static_cast<std::size_t>(o.max_degree);
    }
    if (o.order_cap == 0) {
        throw bredon::InputError("order cap must be positive");
    }
    run.order_cap = bredon::Integer(std::to_string(o.order_cap));
    run.dump_tables = o.dump_tables != 0;
    run.cells = o.cells != 0;
    return run;
}

bredon_format format_of(const bredon_options* options) { return options ? options->format : BREDON_FORMAT_JSON; }

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bredon_status check_out(const void* out) {
    if (out == nullptr) {
        throw bredon::InputError("output pointer is NULL");
    }
    return BREDON_OK;
}

}  // namespace

extern "C" {

void bredon_options_init(bredon_options* options) {
    if (options == nullptr) {
        return;
    }
    options->method = BREDON_METHOD_AUTO;
    options->max_degree = -1;
    options->order_cap = bredon::kDefaultOrderCap;
    options->dump_tables = 0;
    options->cells = 0;
    options->format = BREDON_FORMAT_JSON;
}

bredon_status bredon_system_from_matrix(const int* entries, size_t rank, bredon_system** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (entries == nullptr && rank > 0) {
            throw bredon::InputError("matrix entries are NULL");
        }
        std::vector<std::vector<long long>> raw(rank, std::vector<long long>(rank));
        for (size_t i = 0; i < rank; ++i) {
            for (size_t j = 0; j < rank; ++j) {
                raw[i][j] = entries[i * rank + j];
            }
        }
        *out = new bredon_system{bredon::CoxeterMatrix::parse(raw)};
        return BREDON_OK;
    });
}

bredon_status bredon_system_from_json(const char* json, bredon_system** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (json == nullptr) {
            throw bredon::InputError("JSON text is NULL");
        }
        *out = new bredon_system{bredon::matrix_from_json(nlohmann::json::parse(json))};
        return BREDON_OK;
    });
}

bredon_status bredon_system_from_file(const char* path, bredon_system** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (path == nullptr) {
            throw bredon::InputError("path is NULL");
        }
        *out = new bredon_system{bredon::matrix_from_file(path)};
        return BREDON_OK;
    });
}

void bredon_system_free(bredon_system* system) { delete system; }

size_t bredon_system_rank(const bredon_system* system) { return system ? system->matrix.rank() : 0; }

int bredon_system_is_finite(const bredon_system* system) {
    if (system == nullptr) {
        return 0;
    }
    return bredon::classify(system->matrix, system->matrix.all()).finite() ? 1 : 0;
}

long bredon_spherical_count(const bredon_system* system, size_t size) {
    if (system == nullptr || size > system->matrix.rank()) {
        return -1;
    }
    return static_cast<long>(bredon::enumerate_spherical(system->matrix).count(size));
}

bredon_status bredon_compute(const bredon_system* system, const bredon_options* options, bredon_result** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (system == nullptr) {
            throw bredon::InputError("system is NULL");
        }
        auto result = std::make_unique<bredon_result>();
        result->run = bredon::homology_report(system->matrix, convert(options));
        result->report = format_of(options) == BREDON_FORMAT_TEXT ? bredon::homology_text(result->run)
                                                                  : bredon::dump_json(result->run.json);
        if (result->run.primary) {
            for (const auto& [d, g] : result->run.primary->groups) {
                if (result->torsion.size() <= d) {
                    result->torsion.resize(d + 1);
                }
                for (const auto& t : g.torsion()) {
                    result->torsion[d].push_back(t.get_str());
                }
            }
        }
        *out = result.release();
        return BREDON_OK;
    });
}

void bredon_result_free(bredon_result* result) { delete result; }

bredon_status bredon_result_status(const bredon_result* result) {
    return result ? static_cast<bredon_status>(result->run.status) : BREDON_INPUT_ERROR;
}

size_t bredon_result_degree_count(const bredon_result* result) {
    if (result == nullptr || !result->run.primary || result->run.primary->groups.empty()) {
        return 0;
    }
    return result->run.primary->groups.rbegin()->first + 1;
}

long bredon_result_free_rank(const bredon_result* result, size_t degree) {
    if (result == nullptr || !result->run.primary) {
        return -1;
    }
    return static_cast<long>(result->run.primary->at(degree).free_rank());
}

size_t bredon_result_torsion_count(const bredon_result* result, size_t degree) {
    if (result == nullptr || degree >= result->torsion.size()) {
        return 0;
    }
    return result->torsion[degree].size();
}

const char* bredon_result_torsion(const bredon_result* result, size_t degree, size_t index) {
    if (result == nullptr || degree >= result->torsion.size() || index >= result->torsion[degree].size()) {
        return nullptr;
    }
    return result->torsion[degree][index].c_str();
}

int bredon_result_k_decided(const bredon_result* result) { return result && result->run.k.decided ? 1 : 0; }

size_t bredon_result_discrepancy_count(const bredon_result* result) {
    return result ? result->run.json["discrepancies"].size() : 0;
}

const char* bredon_result_report(const bredon_result* result) { return result ? result->report.c_str() : ""; }

bredon_status bredon_classify_report(const bredon_system* system, bredon_format format, char** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (system == nullptr) {
            throw bredon::InputError("system is NULL");
        }
        const auto report = bredon::classify_report(system->matrix);
        *out = copy_string(format == BREDON_FORMAT_TEXT ? bredon::classify_text(report) : bredon::dump_json(report));
        return BREDON_OK;
    });
}

bredon_status bredon_cells_report(const bredon_system* system, const bredon_options* options, char** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (system == nullptr) {
            throw bredon::InputError("system is NULL");
        }
        const auto report = bredon::cells_report(system->matrix, convert(options));
        *out = copy_string(format_of(options) == BREDON_FORMAT_TEXT ? bredon::cells_text(report)
                                                                    : bredon::dump_json(report));
        return BREDON_OK;
    });
}

bredon_status bredon_tables_report(const bredon_system* system, const bredon_options* options, char** out) {
    return guarded([&] {
        check_out(out);
        *out = nullptr;
        if (system == nullptr) {
            throw bredon::InputError("system is NULL");
        }
        const auto report = bredon::tables_report(system->matrix, convert(options));
        *out = copy_string(format_of(options) == BREDON_FORMAT_TEXT ? bredon::tables_text(report)
                                                                    : bredon::dump_json(report));
        return BREDON_OK;
    });
}

bredon_status bredon_validate_directory(const char* directory, const bredon_options* options,
                                        bredon_status* out_status, char** out) {
    return guarded([&] {
        check_out(out);
        check_out(out_status);
        *out = nullptr;
        if (directory == nullptr) {
            throw bredon::InputError("directory is NULL");
        }
        const auto run = bredon::validate_corpus(directory, convert(options));
        *out_status = static_cast<bredon_status>(run.status);
        *out = copy_string(format_of(options) == BREDON_FORMAT_TEXT ? bredon::validate_text(run)
                                                                    : bredon::dump_json(run.json));
        return BREDON_OK;
    });
}

void bredon_string_free(char* s) { std::free(s); }

const char* bredon_last_error(void) { return last_error.c_str(); }

const char* bredon_version(void) { return "1.0.0"; }

}  // extern "C"
