#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/search.hpp"

namespace gallai {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateMagic = "gallai-certificate v1";

/// Overall outcome recorded in a certificate and mapped to the exit status.
enum class Status { Pass, Fail, BudgetExhausted };

std::string_view to_string(Status status);

/// Assembles a certificate document. Sections appear in the order they are
/// added; see docs/FORMATS.md for the field list.
class Certificate {
public:
    Certificate(std::string construction, Json params);

    void set_shape(int n, int r, int k);
    void add_connectivity(Colour colour, const ConnectivityResult& result);
    void add_multicoloured(const MulticolouredResult& result);
    void add_tricoloured(const TricolouredResult& result);
    void add_max_colours(const MaxColoursResult& result);
    void add_search(const SearchReport& report);
    /// A named boolean check; any false check makes the status Fail.
    void add_check(const std::string& name, bool pass);
    /// Free-form extra fields kept under "details".
    void add_detail(const std::string& key, Json value);

    Status status() const;
    /// Finalises the document with status and elapsed_ms.
    Json finish(double elapsed_ms) const;

private:
    Json doc_;
    Json connectivity_ = Json::array();
    Json checks_ = Json::array();
    Json details_ = Json::object();
    bool failed_ = false;
    bool exhausted_ = false;
};

Json to_json(const ConnectivityWitness& w);
Json to_json(const SearchReport& report);

/// 0 pass, 1 fail, 3 budget exhausted; read from the "status" field only.
int exit_code(const Json& certificate);

}  // namespace gallai
