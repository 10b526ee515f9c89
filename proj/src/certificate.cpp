#include "gallai/certificate.hpp"

#include <cmath>

namespace gallai {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::BudgetExhausted: return "budget_exhausted";
    }
    return "fail";
}

namespace {

Json optional_set(const std::optional<std::vector<Vertex>>& s) {
    return s ? Json(*s) : Json(nullptr);
}

}  // namespace

Json to_json(const ConnectivityWitness& w) {
    Json out;
    out["kind"] = to_string(w.kind);
    if (w.kind == ConnectivityWitness::Kind::None) return out;
    out["source"] = w.source;
    out["target"] = w.target;
    if (w.kind == ConnectivityWitness::Kind::Path) out["path"] = w.path;
    return out;
}

Json to_json(const SearchReport& report) {
    Json out;
    out["task"] = report.task;
    Json params = Json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    out["params"] = params;
    out["optimum"] = report.optimum ? Json(*report.optimum) : Json(nullptr);
    out["complete"] = report.complete;
    out["nodes"] = report.nodes;
    out["pruned"] = report.pruned;
    out["space"] = report.space;
    out["argument"] = report.argument;
    out["witness_verified"] = report.witness_verified;
    Json witness = nullptr;
    if (const auto* c = std::get_if<EdgeColouring>(&report.witness)) {
        witness = {{"kind", "colouring"}, {"n", c->n()}, {"r", c->r()}, {"k", c->k()},
                   {"colours", std::vector<int>(c->colours().begin(), c->colours().end())}};
    } else if (const auto* f = std::get_if<ColourSetFamily>(&report.witness)) {
        witness = {{"kind", "family"}, {"k", f->k()}, {"members", f->members()}};
    } else if (const auto* h = std::get_if<Hypergraph>(&report.witness)) {
        witness = {{"kind", "hypergraph"}, {"n", h->n()}, {"r", h->r()}, {"edges", h->edges()}};
    }
    out["witness"] = witness;
    if (!report.per_seed.empty()) out["per_seed"] = report.per_seed;
    return out;
}

Certificate::Certificate(std::string construction, Json params) {
    doc_["format"] = kCertificateMagic;
    doc_["construction"] = std::move(construction);
    doc_["params"] = params.is_null() ? Json::object() : std::move(params);
}

void Certificate::set_shape(int n, int r, int k) {
    doc_["n"] = n;
    doc_["r"] = r;
    doc_["k"] = k;
}

void Certificate::add_connectivity(Colour colour, const ConnectivityResult& result) {
    connectivity_.push_back({{"colour", colour},
                             {"notion", to_string(result.notion)},
                             {"verdict", to_string(result.verdict)},
                             {"ok", result.ok()},
                             {"witness", to_json(result.witness)}});
    if (!result.ok()) failed_ = true;
}

void Certificate::add_multicoloured(const MulticolouredResult& result) {
    doc_["multicoloured"] = {{"d", result.d},
                             {"mode", to_string(result.mode)},
                             {"visited", result.visited},
                             {"count", result.family.size()},
                             {"raw_count", result.raw_count},
                             {"families", result.family.members()},
                             {"witness", optional_set(result.witness)}};
}

void Certificate::add_tricoloured(const TricolouredResult& result) {
    doc_["tricoloured"] = {{"threshold", result.threshold},
                           {"mode", to_string(result.mode)},
                           {"visited", result.visited},
                           {"count", result.at_least},
                           {"exactly", result.exactly},
                           {"witness", optional_set(result.witness)}};
}

void Certificate::add_max_colours(const MaxColoursResult& result) {
    doc_["max_colours"] = {{"d", result.d}, {"max", result.max}, {"visited", result.visited},
                           {"witness", result.witness}};
}

void Certificate::add_search(const SearchReport& report) {
    doc_["search"] = to_json(report);
    if (!report.complete) exhausted_ = true;
    if (report.optimum && !report.witness_verified) failed_ = true;
}

void Certificate::add_check(const std::string& name, bool pass) {
    checks_.push_back({{"name", name}, {"pass", pass}});
    if (!pass) failed_ = true;
}

void Certificate::add_detail(const std::string& key, Json value) { details_[key] = std::move(value); }

Status Certificate::status() const {
    if (failed_) return Status::Fail;
    if (exhausted_) return Status::BudgetExhausted;
    return Status::Pass;
}

Json Certificate::finish(double elapsed_ms) const {
    Json out;
    auto copy = [&](const char* key) {
        if (doc_.contains(key)) out[key] = doc_[key];
    };
    for (const char* key : {"format", "construction", "params", "n", "r", "k"}) copy(key);
    if (!connectivity_.empty()) out["connectivity"] = connectivity_;
    for (const char* key : {"multicoloured", "tricoloured", "max_colours", "search"}) copy(key);
    if (!checks_.empty()) out["checks"] = checks_;
    if (!details_.empty()) out["details"] = details_;
    out["status"] = to_string(status());
    out["elapsed_ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
    return out;
}

int exit_code(const Json& certificate) {
    const auto status = certificate.value("status", std::string("fail"));
    if (status == "pass") return 0;
    if (status == "budget_exhausted") return 3;
    return 1;
}

}  // namespace gallai
