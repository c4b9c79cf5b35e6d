#include "cli.hpp"

#include "ltlmc/automata.hpp"
#include "ltlmc/checker.hpp"
#include "ltlmc/claimchain.hpp"
#include "ltlmc/errors.hpp"
#include "ltlmc/kripke.hpp"
#include "ltlmc/ltl.hpp"
#include "ltlmc/oracle.hpp"
#include "ltlmc/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace ltlmc::cli
{

namespace
{

namespace fs = std::filesystem;

struct config
{
    std::string command;
    std::string model_path;
    std::string spec_path;
    std::string dir;
    std::string mode = "as-written";
    std::string output = "text";
    std::string automaton_dump;
    bool negate = false;
    std::size_t state_cap = kripke::default_state_cap;
    std::size_t cases = 1000;
    std::uint64_t seed = 1;
    std::optional< std::uint64_t > index;
};

// Raised for diagnostics that map to a specific exit status.
struct failure
{
    int status;
    std::string message;
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in || fs::is_directory( path ) )
        throw failure{ usage_error, fmt::format( "{}: no such file", path ) };
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file( const fs::path& path, std::string_view text )
{
    std::ofstream out( path, std::ios::binary | std::ios::trunc );
    out << text;
    if ( !out )
        throw failure{ usage_error, fmt::format( "{}: cannot write", path.string() ) };
}

checker::check_mode mode_of( const config& cfg )
{
    return *checker::parse_mode( cfg.mode );
}

std::vector< ltl::named_formula > load_specs( const std::string& path )
{
    const auto text = read_file( path );
    try
    {
        return ltl::parse_spec_file( text );
    }
    catch ( const syntax_error& e )
    {
        throw failure{ usage_error, fmt::format( "{}:{}", path, e.what() ) };
    }
}

int cmd_check( const config& cfg, std::ostream& out, std::ostream& err )
{
    const auto model_text = read_file( cfg.model_path );
    const auto specs = load_specs( cfg.spec_path );
    const auto mode = mode_of( cfg );

    std::optional< kripke::model > m;
    try
    {
        auto totalized = kripke::totalize( kripke::parse_model( model_text, fs::path( cfg.model_path ).stem().string() ),
                                           cfg.state_cap );
        if ( !totalized.self_looped.empty() )
            err << fmt::format( "note: {} deadlock state(s) closed with a self-loop\n", totalized.self_looped.size() );
        m = std::move( totalized.totalized );
    }
    catch ( const syntax_error& e )
    {
        throw failure{ usage_error, fmt::format( "{}:{}", cfg.model_path, e.what() ) };
    }
    catch ( const semantic_error& e )
    {
        throw failure{ usage_error, fmt::format( "{}:{}", cfg.model_path, e.what() ) };
    }

    checker::check_options options;
    options.state_cap = cfg.state_cap;

    bool all_hold = true;
    auto reports = nlohmann::json::array();
    std::string text;
    for ( const auto& [ name, spec ] : specs )
    {
        checker::verdict v;
        try
        {
            v = checker::check( *m, spec, mode, options );
        }
        catch ( const unknown_atom& e )
        {
            throw failure{ usage_error, fmt::format( "{}: {}: {}", cfg.spec_path, name, e.what() ) };
        }

        all_hold = all_hold && v.holds;
        reports.push_back( report::check_report( m->name(), name, spec, mode, v ) );

        text += fmt::format( "{}: {} (t={:.3f}s)\n", name, v.holds ? "HOLDS" : "FAILS", v.stats.elapsed_seconds );
        if ( v.vacuous )
            text += "    warning: vacuously satisfied, the antecedent never holds\n";
        if ( v.counterexample )
            text += "    counterexample:\n" + report::render_lasso( *v.counterexample, "      " );
    }

    if ( cfg.output == "json" )
        out << reports.dump( 2 ) << "\n";
    else
        out << text;
    return all_hold ? ok : violated;
}

int cmd_translate( const config& cfg, std::ostream& out )
{
    const auto specs = load_specs( cfg.spec_path );

    std::string dot;
    for ( const auto& [ name, spec ] : specs )
    {
        const auto source = cfg.negate ? ltl::formula::negation( spec ) : spec;
        const auto automaton = automata::translate( source );
        out << fmt::format( "# {}: {}\n", name, ltl::pretty( source ) ) << automata::to_text( automaton );
        dot += automata::to_dot( automaton, name );
    }

    if ( !cfg.automaton_dump.empty() )
        write_file( cfg.automaton_dump, dot );
    return ok;
}

int cmd_suite( const config& cfg, std::ostream& out )
{
    const auto report = claimchain::run_suite( mode_of( cfg ) );
    if ( cfg.output == "json" )
        out << report::suite_report( report ).dump( 2 ) << "\n";
    else
        out << report::render_suite( report );
    return report.pass ? ok : violated;
}

int cmd_emit_builtin( const config& cfg, std::ostream& out )
{
    const fs::path dir{ cfg.dir };
    std::error_code ec;
    fs::create_directories( dir, ec );
    if ( ec )
        throw failure{ usage_error, fmt::format( "{}: {}", cfg.dir, ec.message() ) };

    write_file( dir / "claimchain.model", claimchain::model_text() );
    write_file( dir / "claimchain.spec", claimchain::specs_text() );
    out << ( dir / "claimchain.model" ).string() << "\n" << ( dir / "claimchain.spec" ).string() << "\n";
    return ok;
}

int cmd_oracle( const config& cfg, std::ostream& out )
{
    std::uint64_t first = 0;
    std::uint64_t count = cfg.cases;
    if ( cfg.index )
    {
        first = *cfg.index;
        count = 1;
    }

    if ( count == 0 )
    {
        out << "oracle: 0 cases\n";
        return ok;
    }

    for ( auto i = first; i < first + count; ++i )
    {
        const auto c = oracle::make_case( cfg.seed, i );
        if ( oracle::run_case( c.spec, c.word ).agree() )
            continue;

        const auto small = oracle::shrink( c );
        const auto result = oracle::run_case( small.spec, small.word );
        out << fmt::format( "oracle: disagreement at seed {} index {}\n", cfg.seed, i );
        out << fmt::format( "  formula: {}\n", ltl::pretty( c.spec ) );
        out << fmt::format( "  minimal formula: {}\n", ltl::pretty( small.spec ) );
        out << "  minimal lasso:\n" << report::render_lasso( small.word, "    " );
        out << fmt::format( "  automaton: {}, semantics: {}\n", result.by_automaton, result.by_semantics );
        out << fmt::format( "  replay: ltlmc oracle --seed {} --index {}\n", cfg.seed, i );
        return violated;
    }

    out << fmt::format( "oracle: {} cases, seed {}, 0 disagreements\n", count, cfg.seed );
    return ok;
}

} // namespace

int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    config cfg;

    CLI::App app{ "Explicit-state LTL model checker", "ltlmc" };
    app.require_subcommand( 1 );

    const auto add_mode = [ & ]( CLI::App* sub ) {
        sub->add_option( "--mode", cfg.mode, "as-written | globally-wrapped" )
                ->check( CLI::IsMember( { "as-written", "globally-wrapped" } ) );
    };
    const auto add_output = [ & ]( CLI::App* sub ) {
        sub->add_option( "--output", cfg.output, "text | json" )->check( CLI::IsMember( { "text", "json" } ) );
    };

    auto* check = app.add_subcommand( "check", "Check every formula of a spec file against a model" );
    check->add_option( "model", cfg.model_path, "Model file" )->required();
    check->add_option( "specs", cfg.spec_path, "Spec file" )->required();
    add_mode( check );
    add_output( check );
    check->add_option( "--state-cap", cfg.state_cap, "Maximum number of explored states" )
            ->check( CLI::PositiveNumber );

    auto* translate = app.add_subcommand( "translate", "Translate formulas to Büchi automata" );
    translate->add_option( "specs", cfg.spec_path, "Spec file" )->required();
    translate->add_option( "--automaton-dump", cfg.automaton_dump, "Write a Graphviz rendering to PATH" );
    translate->add_flag( "--negate", cfg.negate, "Translate the negation, as the checker does" );

    auto* suite = app.add_subcommand( "suite", "Reproduce the ClaimChain verdict table" );
    add_mode( suite );
    add_output( suite );

    auto* emit = app.add_subcommand( "emit-builtin", "Write the built-in model and specs to a directory" );
    emit->add_option( "dir", cfg.dir, "Output directory" )->required();

    auto* oracle_cmd = app.add_subcommand( "oracle", "Cross-check automata against the lasso semantics" );
    oracle_cmd->add_option( "--cases", cfg.cases, "Number of random cases" );
    oracle_cmd->add_option( "--seed", cfg.seed, "Generator seed" );
    oracle_cmd->add_option( "--index", cfg.index, "Replay a single case" );

    try
    {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& e )
    {
        const auto status = app.exit( e, out, err );
        return status == 0 ? ok : usage_error;
    }

    try
    {
        if ( check->parsed() )
            return cmd_check( cfg, out, err );
        if ( translate->parsed() )
            return cmd_translate( cfg, out );
        if ( suite->parsed() )
            return cmd_suite( cfg, out );
        if ( emit->parsed() )
            return cmd_emit_builtin( cfg, out );
        return cmd_oracle( cfg, out );
    }
    catch ( const failure& f )
    {
        err << "error: " << f.message << "\n";
        return f.status;
    }
    catch ( const state_space_limit& e )
    {
        err << "error: " << e.what() << "\n";
        return state_limit;
    }
    catch ( const error& e )
    {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace ltlmc::cli
