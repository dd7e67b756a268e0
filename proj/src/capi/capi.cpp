#include "homcount.h"

#include <cstring>
#include <memory>
#include <string>

#include "cache.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "hom.hpp"
#include "structure.hpp"
#include "target_json.hpp"

using namespace homcount;

struct homc_graph {
    SimpleGraph g;
};

struct homc_target {
    TargetGraph h;
};

struct homc_engine {
    Engine engine;
    CacheSession cache;
};

namespace {

thread_local std::string g_lastError;

char* dupString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

homc_status fail(homc_status code, const char* what) {
    g_lastError = what;
    return code;
}

template <typename F>
homc_status guarded(F&& body) {
    try {
        return body();
    } catch (const BudgetError& e) {
        return fail(HOMC_EBUDGET, e.what());
    } catch (const IntegrityError& e) {
        return fail(HOMC_EINTEGRITY, e.what());
    } catch (const ParseError& e) {
        return fail(HOMC_EINVAL, e.what());
    } catch (const GraphError& e) {
        return fail(HOMC_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(HOMC_ERROR, e.what());
    } catch (...) {
        return fail(HOMC_ERROR, "unknown error");
    }
}

homc_status requireArgs(bool ok) {
    if (!ok) {
        g_lastError = "null argument";
        return HOMC_EINVAL;
    }
    return HOMC_OK;
}

void writeOut(char** out, const std::string& value) {
    if (out) *out = dupString(value);
}

}  // namespace

extern "C" {

const char* homc_last_error(void) { return g_lastError.c_str(); }

void homc_string_free(char* s) { std::free(s); }

homc_status homc_graph_from_g6(const char* g6, homc_graph** out) {
    if (requireArgs(g6 && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{graph6Decode(g6)};
        return HOMC_OK;
    });
}

homc_status homc_graph_build(int n, const int* edges, size_t edge_count, homc_graph** out) {
    if (requireArgs(out && (edges || edge_count == 0))) return HOMC_EINVAL;
    return guarded([&] {
        std::vector<std::pair<int, int>> list;
        list.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new homc_graph{SimpleGraph::fromEdges(n, list)};
        return HOMC_OK;
    });
}

homc_status homc_graph_complete(int n, homc_graph** out) {
    if (requireArgs(out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{SimpleGraph::complete(n)};
        return HOMC_OK;
    });
}

homc_status homc_graph_complete_bipartite(int a, int b, homc_graph** out) {
    if (requireArgs(out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{SimpleGraph::completeBipartite(a, b)};
        return HOMC_OK;
    });
}

homc_status homc_graph_turan(int t, int x, homc_graph** out) {
    if (requireArgs(out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{SimpleGraph::turan(t, x)};
        return HOMC_OK;
    });
}

homc_status homc_graph_turan_minus_matching(int t, int x, int class_a, int class_b,
                                            homc_graph** out) {
    if (requireArgs(out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{SimpleGraph::turanMinusMatching(t, x, class_a, class_b)};
        return HOMC_OK;
    });
}

homc_status homc_graph_disjoint_union(const homc_graph* g, const homc_graph* h,
                                      homc_graph** out) {
    if (requireArgs(g && h && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_graph{SimpleGraph::disjointUnion(g->g, h->g)};
        return HOMC_OK;
    });
}

void homc_graph_free(homc_graph* g) { delete g; }

int homc_graph_order(const homc_graph* g) { return g ? g->g.vertexCount() : -1; }

homc_status homc_graph_g6(const homc_graph* g, char** out) {
    if (requireArgs(g && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = dupString(graph6Encode(g->g));
        return HOMC_OK;
    });
}

homc_status homc_graph_certificate(const homc_graph* g, char** hex_out) {
    if (requireArgs(g && hex_out)) return HOMC_EINVAL;
    return guarded([&] {
        *hex_out = dupString(certificateOf(g->g).hex());
        return HOMC_OK;
    });
}

homc_status homc_graph_classify(const homc_graph* g, int* connected, int* bipartite,
                                int* min_degree, int* max_degree) {
    if (requireArgs(g)) return HOMC_EINVAL;
    return guarded([&] {
        auto c = classifyGraph(g->g);
        if (connected) *connected = c.isConnected;
        if (bipartite) *bipartite = c.isBipartite;
        if (min_degree) *min_degree = c.minDegree;
        if (max_degree) *max_degree = c.maxDegree;
        return HOMC_OK;
    });
}

homc_status homc_target_from_json(const char* json_text, homc_target** out) {
    if (requireArgs(json_text && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_target{targetFromJsonText(json_text)};
        return HOMC_OK;
    });
}

homc_status homc_target_named(const char* name, homc_target** out) {
    if (requireArgs(name && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_target{targetFromName(name)};
        return HOMC_OK;
    });
}

void homc_target_free(homc_target* h) { delete h; }

int homc_target_order(const homc_target* h) { return h ? h->h.vertexCount() : -1; }

int homc_target_max_degree(const homc_target* h) { return h ? h->h.maxDegree() : -1; }

homc_status homc_target_json(const homc_target* h, char** out) {
    if (requireArgs(h && out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = dupString(targetToJson(h->h).dump());
        return HOMC_OK;
    });
}

homc_status homc_target_certificate(const homc_target* h, char** hex_out) {
    if (requireArgs(h && hex_out)) return HOMC_EINVAL;
    return guarded([&] {
        *hex_out = dupString(certificateOf(h->h).hex());
        return HOMC_OK;
    });
}

homc_status homc_engine_new(homc_engine** out) {
    if (requireArgs(out)) return HOMC_EINVAL;
    return guarded([&] {
        *out = new homc_engine{};
        return HOMC_OK;
    });
}

void homc_engine_free(homc_engine* e) {
    if (!e) return;
    try {
        e->cache.flush(e->engine.memo());
    } catch (...) {
        // Destruction path: the cache stays consistent, entries may be lost.
    }
    delete e;
}

void homc_engine_set_budget(homc_engine* e, uint64_t assignments) {
    if (e) e->engine.options().budget = assignments;
}

void homc_engine_set_workers(homc_engine* e, int workers) {
    if (e) e->engine.options().workers = workers < 1 ? 1 : workers;
}

homc_status homc_engine_cache_attach(homc_engine* e, const char* directory) {
    if (requireArgs(e && directory)) return HOMC_EINVAL;
    return guarded([&] {
        e->cache.attach(directory, e->engine.memo());
        return HOMC_OK;
    });
}

homc_status homc_engine_cache_flush(homc_engine* e) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        e->cache.flush(e->engine.memo());
        return HOMC_OK;
    });
}

homc_status homc_count(homc_engine* e, const homc_graph* g, const homc_target* h,
                       char** decimal_out) {
    if (requireArgs(e && g && h && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        *decimal_out = dupString(toDecimal(e->engine.count(g->g, h->h)));
        return HOMC_OK;
    });
}

homc_status homc_count_brute(homc_engine* e, const homc_graph* g, const homc_target* h,
                             char** decimal_out) {
    if (requireArgs(e && g && h && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        *decimal_out = dupString(toDecimal(e->engine.bruteForce(g->g, h->h)));
        return HOMC_OK;
    });
}

homc_status homc_count_qcolourings(homc_engine* e, const homc_graph* g, int q,
                                   char** decimal_out) {
    if (requireArgs(e && g && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        *decimal_out = dupString(toDecimal(e->engine.qColourings(g->g, q)));
        return HOMC_OK;
    });
}

homc_status homc_count_disjoint_copies(homc_engine* e, const homc_graph* g,
                                       const char* copies_decimal, const homc_target* h,
                                       char** decimal_out) {
    if (requireArgs(e && g && copies_decimal && h && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        BigCount copies = fromDecimal(copies_decimal);
        *decimal_out = dupString(toDecimal(e->engine.disjointCopies(g->g, copies, h->h)));
        return HOMC_OK;
    });
}

homc_status homc_count_complete_bipartite(homc_engine* e, int a, int b,
                                          const homc_target* h, char** decimal_out) {
    if (requireArgs(e && h && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        *decimal_out = dupString(toDecimal(e->engine.completeBipartiteCount(a, b, h->h)));
        return HOMC_OK;
    });
}

homc_status homc_s_value(homc_engine* e, int delta, const homc_target* h,
                         char** decimal_out) {
    if (requireArgs(e && h && decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        SProfile profile = sValue(delta, h->h, e->engine.options().budget);
        *decimal_out = dupString(toDecimal(profile.sValue));
        return HOMC_OK;
    });
}

homc_status homc_k0(int t, int alpha, char** decimal_out) {
    if (requireArgs(decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        *decimal_out = dupString(toDecimal(computeK0(t, alpha)));
        return HOMC_OK;
    });
}

namespace {

EnumSpec makeSpec(int n, int min_degree, int connected_only, const char* prefix, int cap) {
    EnumSpec spec;
    spec.n = n;
    spec.minDegree = min_degree;
    spec.connectedOnly = connected_only != 0;
    if (prefix) spec.shardPrefix = prefix;
    spec.cap = cap > 0 ? cap : kDefaultEnumCap;
    return spec;
}

}  // namespace

homc_status homc_enumerate_g6(int n, int min_degree, int connected_only,
                              const char* shard_prefix_hex, int cap, char** lines_out) {
    if (requireArgs(lines_out)) return HOMC_EINVAL;
    return guarded([&] {
        auto graphs = enumerateGraphs(makeSpec(n, min_degree, connected_only,
                                               shard_prefix_hex, cap));
        std::string out;
        for (const auto& eg : graphs) {
            out += graph6Encode(eg.graph);
            out += '\n';
        }
        *lines_out = dupString(out);
        return HOMC_OK;
    });
}

homc_status homc_count_classes(int n, int min_degree, int connected_only, int cap,
                               char** decimal_out) {
    if (requireArgs(decimal_out)) return HOMC_EINVAL;
    return guarded([&] {
        auto count = countClasses(makeSpec(n, min_degree, connected_only, nullptr, cap));
        *decimal_out = dupString(std::to_string(count));
        return HOMC_OK;
    });
}

homc_status homc_scan_extremal(homc_engine* e, int n, int min_degree, int connected_only,
                               int cap, const homc_target* h, char** json_out,
                               char** csv_out) {
    if (requireArgs(e && h && json_out)) return HOMC_EINVAL;
    return guarded([&] {
        auto report = scanExtremal(e->engine,
                                   makeSpec(n, min_degree, connected_only, nullptr, cap),
                                   h->h);
        writeOut(json_out, report.toJson().dump());
        writeOut(csv_out, report.toCsv());
        return HOMC_OK;
    });
}

namespace {

homc_status finishSweep(const LemmaSweepReport& report, char** json_out, char** csv_out,
                        int* pass_out) {
    writeOut(json_out, report.toJson().dump());
    writeOut(csv_out, report.toCsv());
    if (pass_out) *pass_out = report.pass ? 1 : 0;
    return HOMC_OK;
}

}  // namespace

homc_status homc_verify_path_lemma(homc_engine* e, int max_target_vertices, int r_max,
                                   const char* force_include_named_csv, char** json_out,
                                   char** csv_out, int* pass_out) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        std::vector<TargetGraph> forced;
        if (force_include_named_csv && *force_include_named_csv) {
            std::string csv = force_include_named_csv;
            size_t pos = 0;
            while (pos <= csv.size()) {
                size_t comma = csv.find(',', pos);
                std::string item = csv.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!item.empty()) forced.push_back(targetFromName(item));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        auto report = checkPathLemma(e->engine, max_target_vertices, r_max, forced);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

homc_status homc_verify_lemma42(homc_engine* e, int delta, const homc_target* h, int n_min,
                                int n_max, char** json_out, char** csv_out, int* pass_out) {
    if (requireArgs(e && h)) return HOMC_EINVAL;
    return guarded([&] {
        auto report = checkLemma42(e->engine, delta, h->h, n_min, n_max);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

homc_status homc_verify_theorem31(homc_engine* e, int t, int alpha, int m,
                                  const char* k_decimal, char** json_out, char** csv_out,
                                  int* pass_out) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        BigCount k = k_decimal ? fromDecimal(k_decimal) : computeK0(t, alpha);
        auto report = checkTheorem31(e->engine, t, alpha, m, k);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

homc_status homc_verify_tprime(homc_engine* e, char** json_out, char** csv_out,
                               int* pass_out) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        auto report = checkTPrimeFactor(e->engine);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

homc_status homc_verify_closed_forms(homc_engine* e, int samples, uint64_t seed,
                                     char** json_out, char** csv_out, int* pass_out) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        auto report = checkClosedForms(e->engine, samples, seed);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

homc_status homc_verify_prop41(homc_engine* e, int max_n, char** json_out, char** csv_out,
                               int* pass_out) {
    if (requireArgs(e)) return HOMC_EINVAL;
    return guarded([&] {
        auto report = checkProp41(e->engine, max_n);
        return finishSweep(report, json_out, csv_out, pass_out);
    });
}

namespace {

homc_status finishConjecture(const ConjectureComparison& cc, char** json_out,
                             char** csv_out, int* bound_holds_out) {
    writeOut(json_out, cc.toJson().dump());
    writeOut(csv_out, cc.toCsv());
    if (bound_holds_out) *bound_holds_out = cc.boundHolds ? 1 : 0;
    return HOMC_OK;
}

}  // namespace

homc_status homc_check_conjecture(homc_engine* e, const homc_graph* g, int delta,
                                  const homc_target* h, char** json_out, char** csv_out,
                                  int* bound_holds_out) {
    if (requireArgs(e && g && h)) return HOMC_EINVAL;
    return guarded([&] {
        auto cc = checkConjecture(e->engine, g->g, delta, ConjectureTarget{h->h});
        return finishConjecture(cc, json_out, csv_out, bound_holds_out);
    });
}

homc_status homc_check_conjecture_copies(homc_engine* e, const homc_graph* g, int delta,
                                         const char* copies_decimal,
                                         const homc_target* base, char** json_out,
                                         char** csv_out, int* bound_holds_out) {
    if (requireArgs(e && g && copies_decimal && base)) return HOMC_EINVAL;
    return guarded([&] {
        CopiesTarget target{fromDecimal(copies_decimal), base->h};
        auto cc = checkConjecture(e->engine, g->g, delta, ConjectureTarget{target});
        return finishConjecture(cc, json_out, csv_out, bound_holds_out);
    });
}

homc_status homc_conjecture_minimal_k(homc_engine* e, const homc_graph* g, int delta,
                                      const homc_target* base, const char* k_max_decimal,
                                      char** json_out, char** k_decimal_out,
                                      int* found_out) {
    if (requireArgs(e && g && base && k_max_decimal)) return HOMC_EINVAL;
    return guarded([&] {
        BigCount kMax = fromDecimal(k_max_decimal);
        auto k = minimalViolatingCopies(e->engine, g->g, delta, base->h, kMax);
        if (found_out) *found_out = k ? 1 : 0;
        if (!k) {
            writeOut(json_out, "{}");
            writeOut(k_decimal_out, "");
            return HOMC_OK;
        }
        nlohmann::json j;
        j["minimalViolatingK"] = toDecimal(*k);
        j["atK"] = checkConjecture(e->engine, g->g, delta, CopiesTarget{*k, base->h})
                       .toJson();
        if (*k > 1)
            j["atKMinus1"] = checkConjecture(e->engine, g->g, delta,
                                             CopiesTarget{*k - 1, base->h})
                                 .toJson();
        writeOut(json_out, j.dump());
        writeOut(k_decimal_out, toDecimal(*k));
        return HOMC_OK;
    });
}

}  // extern "C"
