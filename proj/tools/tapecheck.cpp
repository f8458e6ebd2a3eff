#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tapes/cr.hpp"
#include "tapes/dot.hpp"
#include "tapes/json_io.hpp"
#include "tapes/laws.hpp"
#include "tapes/logic.hpp"
#include "tapes/search.hpp"
#include "tapes/sexpr.hpp"
#include "tapes/sugar.hpp"

using namespace tapes;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    bool as_json = false;
    nlohmann::json j;

    void field(const std::string& key, const nlohmann::json& value) { j[key] = value; }
    void line(const std::string& text) {
        if (!as_json) std::cout << text << "\n";
    }
    void flush() {
        if (as_json) std::cout << j.dump(2) << "\n";
    }
};

int report_verdict(Output& out, bool holds, const std::string& witness) {
    out.field("verdict", holds ? "holds" : "fails");
    if (!holds && !witness.empty()) {
        out.field("witness", witness);
        out.line("witness: " + witness);
    }
    out.line(holds ? "holds" : "fails");
    out.flush();
    return holds ? kExitHolds : kExitRefuted;
}

ProgramSignature program_signature_from(const Interpretation& interp) {
    ProgramSignature sig;
    for (const Sort& a : interp.signature.sorts) sig.sorts.insert(a);
    for (const auto& [name, arity] : interp.signature.symbols) {
        if (!name.empty() && name[0] == '!') continue;  // complement entries pair up below
        if (arity.second.factors.size() == 1)
            sig.functions[name] = {arity.first, arity.second.factors[0]};
        else if (arity.second.is_unit())
            sig.predicates[name] = arity.first;
    }
    return sig;
}

// With a single-sorted context, arities of undeclared symbols can be
// inferred from their use sites.
void infer_symbols(const CmdPtr& cmd, const Context& ctx, ProgramSignature& sig);

void infer_expr(const ExprPtr& e, const Sort& a, ProgramSignature& sig) {
    if (e->kind == Expr::Kind::Var) return;
    if (!sig.functions.count(e->fn))
        sig.functions[e->fn] = {Monomial{std::vector<Sort>(e->args.size(), a)}, a};
    for (const ExprPtr& arg : e->args) infer_expr(arg, a, sig);
}

void infer_pred(const PredPtr& p, const Sort& a, ProgramSignature& sig) {
    switch (p->kind) {
        case Pred::Kind::Atom:
        case Pred::Kind::NAtom:
            if (!sig.predicates.count(p->pred))
                sig.predicates[p->pred] = Monomial{std::vector<Sort>(p->args.size(), a)};
            for (const ExprPtr& arg : p->args) infer_expr(arg, a, sig);
            return;
        case Pred::Kind::Top:
        case Pred::Kind::Bot:
            return;
        case Pred::Kind::And:
        case Pred::Kind::Or:
            infer_pred(p->lhs, a, sig);
            infer_pred(p->rhs, a, sig);
            return;
    }
}

void infer_symbols(const CmdPtr& cmd, const Context& ctx, ProgramSignature& sig) {
    std::set<Sort> used;
    for (const auto& [x, a] : ctx.vars) used.insert(a);
    if (used.size() != 1) return;  // inference only for single-sorted contexts
    Sort a = *used.begin();
    switch (cmd->kind) {
        case Cmd::Kind::Abort:
        case Cmd::Kind::Skip:
            return;
        case Cmd::Kind::If:
        case Cmd::Kind::While:
            infer_pred(cmd->guard, a, sig);
            if (cmd->c1) infer_symbols(cmd->c1, ctx, sig);
            if (cmd->c2) infer_symbols(cmd->c2, ctx, sig);
            return;
        case Cmd::Kind::Seq:
            infer_symbols(cmd->c1, ctx, sig);
            infer_symbols(cmd->c2, ctx, sig);
            return;
        case Cmd::Kind::Assign:
            infer_expr(cmd->expr, a, sig);
            return;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tapecheck: diagrammatic algebra of finite relations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->capture_default_str();

    // typecheck <term-file>
    auto* cmd_typecheck = app.add_subcommand("typecheck", "infer the type of a term");
    std::string term_path;
    cmd_typecheck->add_option("term-file", term_path)->required();

    // eval <term-file> <interp-file>
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a term in an interpretation");
    std::string eval_term, eval_interp;
    cmd_eval->add_option("term-file", eval_term)->required();
    cmd_eval->add_option("interp-file", eval_interp)->required();

    // encode <program-file> --context decl [--interp file]
    auto* cmd_encode = app.add_subcommand("encode", "encode an imperative program as a term");
    std::string prog_path, context_decl, encode_interp;
    cmd_encode->add_option("program-file", prog_path)->required();
    cmd_encode->add_option("--context", context_decl, "typing context, e.g. \"x:A, y:A\"")->required();
    cmd_encode->add_option("--interp", encode_interp, "interpretation file declaring the symbols");

    // check-triple <triple-file> <interp-file>
    auto* cmd_triple = app.add_subcommand("check-triple", "check a program-logic triple in a model");
    std::string triple_path, triple_interp;
    cmd_triple->add_option("triple-file", triple_path)->required();
    cmd_triple->add_option("interp-file", triple_interp)->required();

    // check-cr "<e1>" "<e2>" [--max-size k] [--budget n] [--seed s] [--eq]
    auto* cmd_cr = app.add_subcommand("check-cr", "search countermodels of a relational inclusion");
    std::string cr_lhs, cr_rhs;
    int cr_max_size = 3;
    std::uint64_t cr_budget = 1u << 20, cr_seed = 1;
    bool cr_eq = false;
    cmd_cr->add_option("lhs", cr_lhs)->required();
    cmd_cr->add_option("rhs", cr_rhs)->required();
    cmd_cr->add_option("--max-size", cr_max_size)->capture_default_str();
    cmd_cr->add_option("--budget", cr_budget)->capture_default_str();
    cmd_cr->add_option("--seed", cr_seed)->capture_default_str();
    cmd_cr->add_flag("--eq", cr_eq, "check equivalence instead of inclusion");

    // check-theory <theory-file> <interp-file>
    auto* cmd_theory = app.add_subcommand("check-theory", "check the axioms of a theory in a model");
    std::string theory_path, theory_interp;
    cmd_theory->add_option("theory-file", theory_path)->required();
    cmd_theory->add_option("interp-file", theory_interp)->required();

    // search <ineq-file> --max-size k --budget n --seed s
    auto* cmd_search = app.add_subcommand("search", "search a countermodel of an inclusion of terms");
    std::string ineq_path;
    int search_max_size = 2;
    std::uint64_t search_budget = 1u << 20, search_seed = 1;
    cmd_search->add_option("ineq-file", ineq_path)->required();
    cmd_search->add_option("--max-size", search_max_size)->capture_default_str();
    cmd_search->add_option("--budget", search_budget)->capture_default_str();
    cmd_search->add_option("--seed", search_seed)->capture_default_str();

    // render <term-file> --format dot|text
    auto* cmd_render = app.add_subcommand("render", "render a term");
    std::string render_path, render_format = "dot";
    cmd_render->add_option("term-file", render_path)->required();
    cmd_render->add_option("--format", render_format, "dot or text")->capture_default_str();

    // laws --suite name --samples n --seed s
    auto* cmd_laws = app.add_subcommand("laws", "run the axiom and property harnesses");
    std::string suite = "all";
    int samples = 200;
    std::uint64_t laws_seed = 1;
    cmd_laws->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    cmd_laws->add_option("--samples", samples)->capture_default_str();
    cmd_laws->add_option("--seed", laws_seed)->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Output out;
    out.as_json = format == "json";

    try {
        if (cmd_typecheck->parsed()) {
            TermFile f = load_term_file(term_path);
            auto [dom, cod] = typecheck(f.term, f.signature);
            out.field("domain", to_string(dom));
            out.field("codomain", to_string(cod));
            out.line(to_string(dom) + " -> " + to_string(cod));
            out.flush();
            return kExitHolds;
        }

        if (cmd_eval->parsed()) {
            TermFile f = load_term_file(eval_term);
            Interpretation interp = load_interpretation(eval_interp);
            for (const auto& [name, arity] : f.signature.symbols)
                if (!interp.signature.has_symbol(name))
                    throw UnknownSymbol("interpretation does not cover symbol '" + name + "'");
            interp.signature = f.signature;
            typecheck(f.term, f.signature);
            FinRel rel = eval(f.term, interp);
            out.field("relation", nlohmann::json::parse(finrel_to_json(rel)));
            out.line(rel.to_string());
            out.flush();
            return kExitHolds;
        }

        if (cmd_encode->parsed()) {
            Context ctx = parse_context(context_decl);
            CmdPtr program = parse_program(read_file(prog_path));
            ProgramSignature sig;
            if (!encode_interp.empty()) {
                sig = program_signature_from(load_interpretation(encode_interp));
            }
            for (const auto& [x, a] : ctx.vars) sig.sorts.insert(a);
            infer_symbols(program, ctx, sig);
            typecheck_cmd(ctx, program, sig);
            TapePtr term = encode_cmd(ctx, program, sig);
            std::cout << term_file_to_json(sig.to_signature(), term) << "\n";
            return kExitHolds;
        }

        if (cmd_triple->parsed()) {
            Interpretation interp = load_interpretation(triple_interp);
            ProgramSignature sig = program_signature_from(interp);
            std::string text = read_file(triple_path);
            // first line declares the context, the rest is the triple
            std::istringstream ss(text);
            std::string header;
            std::getline(ss, header);
            std::string body((std::istreambuf_iterator<char>(ss)), std::istreambuf_iterator<char>());
            const std::string prefix = "context:";
            if (header.compare(0, prefix.size(), prefix) != 0)
                throw SyntaxError("triple file must start with 'context: ...'", 0);
            Context ctx = parse_context(header.substr(prefix.size()));
            Triple t = parse_triple(body, ctx);
            CheckReport rep = check_triple(t, sig, interp);
            return report_verdict(out, rep.holds, rep.detail);
        }

        if (cmd_cr->parsed()) {
            CRPtr lhs = parse_cr(cr_lhs);
            CRPtr rhs = parse_cr(cr_rhs);
            std::set<std::string> symbols = cr_symbols(lhs);
            for (const std::string& r : cr_symbols(rhs)) symbols.insert(r);
            Signature sig = cr_signature(symbols);
            Theory theory;
            theory.signature = sig;
            theory.axioms.push_back({encode_cr(lhs, sig), encode_cr(rhs, sig), cr_eq});
            SearchOptions opts;
            opts.max_size = cr_max_size;
            opts.budget = cr_budget;
            opts.seed = cr_seed;
            out.field("seed", cr_seed);
            auto counter = search_theory_countermodel(theory, opts);
            if (counter) {
                out.field("countermodel", nlohmann::json::parse(interpretation_to_json(*counter)));
                out.field("verdict", "refuted");
                for (const auto& [name, rel] : counter->relations)
                    out.line("countermodel: " + name + " = " + rel.to_string() + " on carrier size " +
                             std::to_string(counter->sizes.begin()->second));
                out.line("refuted");
                out.flush();
                return kExitRefuted;
            }
            out.field("verdict", "no countermodel");
            out.line("no countermodel up to size " + std::to_string(cr_max_size));
            out.flush();
            return kExitHolds;
        }

        if (cmd_theory->parsed()) {
            Theory theory = load_theory(theory_path);
            Interpretation interp = load_interpretation(theory_interp);
            interp.signature = theory.signature;
            CheckReport rep = check_theory(theory, interp);
            if (!rep.holds) out.field("axiom", rep.axiom_index);
            return report_verdict(out, rep.holds, rep.detail);
        }

        if (cmd_search->parsed()) {
            IneqFile f = load_ineq_file(ineq_path);
            SearchOptions opts;
            opts.max_size = search_max_size;
            opts.budget = search_budget;
            opts.seed = search_seed;
            out.field("seed", search_seed);
            auto counter = search_countermodel(f.lhs, f.rhs, f.signature, opts);
            if (counter) {
                std::string js = interpretation_to_json(*counter);
                out.field("countermodel", nlohmann::json::parse(js));
                out.field("verdict", "refuted");
                out.line("refuted by:");
                out.line(js);
                out.flush();
                return kExitRefuted;
            }
            out.field("verdict", "no countermodel");
            out.line("no countermodel up to size " + std::to_string(search_max_size));
            out.flush();
            return kExitHolds;
        }

        if (cmd_render->parsed()) {
            TermFile f = load_term_file(render_path);
            if (render_format == "dot")
                std::cout << to_dot(f.term);
            else
                std::cout << dump_sexpr(f.term) << "\n";
            return kExitHolds;
        }

        if (cmd_laws->parsed()) {
            std::vector<LawCheck> checks = run_law_suite(suite, samples, laws_seed);
            bool all_ok = true;
            nlohmann::json results = nlohmann::json::array();
            out.field("seed", laws_seed);
            if (!out.as_json) std::cout << "seed " << laws_seed << ", " << samples << " samples per law\n";
            for (const LawCheck& c : checks) {
                all_ok = all_ok && c.ok();
                if (out.as_json) {
                    results.push_back({{"law", c.name},
                                       {"checked", c.checked},
                                       {"failures", c.failures},
                                       {"witness", c.witness}});
                } else {
                    std::cout << (c.ok() ? "[pass] " : "[FAIL] ") << c.name << " (" << c.checked << " checked)";
                    if (!c.ok()) std::cout << " -- " << c.witness;
                    std::cout << "\n";
                }
            }
            if (out.as_json) {
                out.field("laws", results);
                out.flush();
            }
            return all_ok ? kExitHolds : kExitRefuted;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
