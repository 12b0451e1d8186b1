#pragma once

#include "hwnorm/oracle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwn::cli {

using Json = nlohmann::ordered_json;

enum class Command { Decompose, Ratio, Cnorm, Unitary, Filtration, Scan, Check, Table };
enum class Format { Text, Json, Csv };

struct Request {
    Command command = Command::Decompose;
    std::string group;
    std::string fiber;
    std::optional<Rat> lambda;
    int degree = 0;
    bool degree_given = false;
    std::string ktype;
    Format format = Format::Text;
    bool conjecture = false;
    bool eval = false;
    std::string suite = "all";
};

// Malformed or unsupported request; maps to exit status 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum Status : int { Ok = 0, CheckFailed = 1, BadRequest = 2, Conjectural = 3 };

// "sp:r=2", "su:q=2,s=3", "sostar:s=5", "spin:n=6", "e6", "e7".
GroupSpec parse_group(const std::string& text);
// "k=1", "k=2,1,0", "kind=det,k=2", "k=1/2,sign=-". Empty means the scalar fiber.
FiberSpec parse_fiber(const GroupSpec& g, const std::string& text);
// "m=2,1;kappa=1,0;l=1/2;n=3": selects the unique matching K-type.
KType parse_ktype(const GroupSpec& g, const FiberSpec& f, const std::string& text);

Json to_json(const KType& t);
KType ktype_from_json(const Json& j);
Json to_json(const FactoredFn& f);
Json to_json(const UnitarySet& u);
Json to_json(const CheckReport& c);

// HWNORM_MAX_DEGREE, default 12.
int max_degree();

// A named oracle suite: graded_dim, two_form, e6_recurrence, su11_integral, embedding,
// gamma_poch, or all.
std::vector<CheckReport> run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

// Configurations exercised by the graded-dimension and two-form suites.
struct Config {
    GroupSpec group;
    FiberSpec fiber;
    bool conjecture = false;
};
std::vector<Config> standard_configs();

int run(const Request& req, std::ostream& out, std::ostream& err);
// Parses argv-style arguments (without the program name) and runs.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hwn::cli
