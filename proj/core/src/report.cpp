#include "ltlmc/report.hpp"

#include <fmt/format.h>

namespace ltlmc::report
{

namespace
{

constexpr const char* holds_symbol = "⊤";
constexpr const char* fails_symbol = "⊥";

} // namespace

nlohmann::json to_json( const state& s )
{
    auto out = nlohmann::json::object();
    for ( const auto& [ name, value ] : s )
        out[ name ] = value;
    return out;
}

nlohmann::json to_json( const lasso& w )
{
    auto prefix = nlohmann::json::array();
    for ( const auto& s : w.prefix )
        prefix.push_back( to_json( s ) );
    auto cycle = nlohmann::json::array();
    for ( const auto& s : w.cycle )
        cycle.push_back( to_json( s ) );
    return { { "prefix", std::move( prefix ) }, { "cycle", std::move( cycle ) } };
}

nlohmann::json check_report( const std::string& model_name, const std::string& name, const ltl::formula& spec,
                             checker::check_mode mode, const checker::verdict& v )
{
    return {
        { "model", model_name },
        { "name", name },
        { "spec", ltl::pretty( spec ) },
        { "mode", checker::to_string( mode ) },
        { "verdict", v.holds ? "holds" : "fails" },
        { "vacuous", v.vacuous },
        { "counterexample", v.counterexample ? to_json( *v.counterexample ) : nlohmann::json( nullptr ) },
        { "stats", { { "product_states", v.stats.product_states }, { "elapsed_seconds", v.stats.elapsed_seconds } } },
    };
}

nlohmann::json suite_report( const claimchain::suite_report& report )
{
    auto expected = nlohmann::json::array();
    auto specs = nlohmann::json::array();
    for ( const auto& e : report.entries )
    {
        expected.push_back( e.expected_holds ? "holds" : "fails" );
        specs.push_back( check_report( "claimchain", e.id, e.spec, report.mode, e.verdict ) );
    }
    return {
        { "model", "claimchain" },
        { "mode", checker::to_string( report.mode ) },
        { "pass", report.pass },
        { "expected", std::move( expected ) },
        { "specs", std::move( specs ) },
    };
}

std::string render_lasso( const lasso& w, const std::string& indent )
{
    std::string out;
    for ( const auto& s : w.prefix )
        out += fmt::format( "{}  {}\n", indent, to_string( s ) );
    out += fmt::format( "{}-- loop starts here --\n", indent );
    for ( const auto& s : w.cycle )
        out += fmt::format( "{}  {}\n", indent, to_string( s ) );
    return out;
}

std::string render_suite( const claimchain::suite_report& report )
{
    std::string out = fmt::format( "ClaimChain verdict table (mode: {})\n", checker::to_string( report.mode ) );
    out += fmt::format( "{:<6} {:<8} {:<10} {}\n", "spec", "verdict", "time (s)", "expected" );
    for ( const auto& e : report.entries )
    {
        const bool match = e.verdict.holds == e.expected_holds;
        const std::string_view note = match ? ( e.verdict.vacuous ? "(vacuous)" : "" ) : "MISMATCH";
        const auto* expected = e.expected_holds ? holds_symbol : fails_symbol;
        out += fmt::format( "{:<6} {:<8} {:<10.3f} ", e.id, e.verdict.holds ? holds_symbol : fails_symbol,
                            e.verdict.stats.elapsed_seconds );
        out += note.empty() ? fmt::format( "{}\n", expected ) : fmt::format( "{:<8} {}\n", expected, note );
    }
    out += report.pass ? "PASS\n" : "FAIL\n";
    return out;
}

} // namespace ltlmc::report
