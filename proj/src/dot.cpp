#include "tapes/dot.hpp"

#include <sstream>

namespace tapes {

namespace {

struct DotBuilder {
    std::ostringstream out;
    int next_id = 0;
    int next_cluster = 0;

    std::string fresh_node(const std::string& label, const char* shape) {
        std::string id = "n" + std::to_string(next_id++);
        out << "  " << id << " [label=\"" << label << "\", shape=" << shape << "];\n";
        return id;
    }

    struct Span {
        std::string entry, exit;
    };

    Span circuit(const CircuitPtr& c) {
        switch (c->kind) {
            case Circuit::Kind::IdSort: {
                std::string n = fresh_node("id " + c->sort_a, "plaintext");
                return {n, n};
            }
            case Circuit::Kind::IdUnit: {
                std::string n = fresh_node("id 1", "plaintext");
                return {n, n};
            }
            case Circuit::Kind::Generator: {
                std::string n = fresh_node(c->generator_name, "box");
                return {n, n};
            }
            case Circuit::Kind::Symmetry: {
                std::string n = fresh_node("swap " + c->sort_a + " " + c->sort_b, "box");
                return {n, n};
            }
            case Circuit::Kind::Seq: {
                Span a = circuit(c->lhs);
                Span b = circuit(c->rhs);
                out << "  " << a.exit << " -> " << b.entry << " [label=\"" << to_string(c->lhs->cod) << "\"];\n";
                return {a.entry, b.exit};
            }
            case Circuit::Kind::Tensor: {
                std::string cl = "cluster" + std::to_string(next_cluster++);
                out << "  subgraph " << cl << " {\n  style=invis;\n";
                Span a = circuit(c->lhs);
                Span b = circuit(c->rhs);
                out << "  }\n";
                (void)b;
                return {a.entry, a.exit};
            }
            case Circuit::Kind::Discharger: {
                std::string n = fresh_node("discard " + c->sort_a, "point");
                return {n, n};
            }
            case Circuit::Kind::Copier: {
                std::string n = fresh_node("copy " + c->sort_a, "point");
                return {n, n};
            }
            case Circuit::Kind::Codischarger: {
                std::string n = fresh_node("codischarge " + c->sort_a, "point");
                return {n, n};
            }
            case Circuit::Kind::Cocopier: {
                std::string n = fresh_node("cocopy " + c->sort_a, "point");
                return {n, n};
            }
        }
        throw Error("unreachable");
    }

    Span tape(const TapePtr& t) {
        switch (t->kind) {
            case Tape::Kind::IdMonomial: {
                std::string n = fresh_node("id " + to_string(t->u), "plaintext");
                return {n, n};
            }
            case Tape::Kind::IdZero: {
                std::string n = fresh_node("id 0", "plaintext");
                return {n, n};
            }
            case Tape::Kind::Embed: {
                std::string cl = "cluster" + std::to_string(next_cluster++);
                out << "  subgraph " << cl << " {\n  style=rounded;\n  label=\"\";\n";
                Span inner = circuit(t->circuit);
                out << "  }\n";
                return inner;
            }
            case Tape::Kind::SymmetryPlus: {
                std::string n = fresh_node("swap+ " + to_string(t->u) + " " + to_string(t->v), "box");
                return {n, n};
            }
            case Tape::Kind::Seq: {
                Span a = tape(t->lhs);
                Span b = tape(t->rhs);
                out << "  " << a.exit << " -> " << b.entry << " [label=\"" << to_string(t->lhs->cod) << "\"];\n";
                return {a.entry, b.exit};
            }
            case Tape::Kind::Sum: {
                std::string cl = "cluster" + std::to_string(next_cluster++);
                out << "  subgraph " << cl << " {\n  style=dotted;\n  label=\"+\";\n";
                Span a = tape(t->lhs);
                Span b = tape(t->rhs);
                out << "  }\n";
                (void)b;
                return {a.entry, a.exit};
            }
            case Tape::Kind::Bang: {
                std::string n = fresh_node("bang " + to_string(t->u), "point");
                return {n, n};
            }
            case Tape::Kind::Diag: {
                std::string n = fresh_node("split " + to_string(t->u), "point");
                return {n, n};
            }
            case Tape::Kind::Cobang: {
                std::string n = fresh_node("cobang " + to_string(t->u), "point");
                return {n, n};
            }
            case Tape::Kind::Codiag: {
                std::string n = fresh_node("merge " + to_string(t->u), "point");
                return {n, n};
            }
            case Tape::Kind::Trace: {
                std::string cl = "cluster" + std::to_string(next_cluster++);
                out << "  subgraph " << cl << " {\n  style=dashed;\n  label=\"tr " << to_string(t->u) << "\";\n";
                Span inner = tape(t->lhs);
                out << "  }\n";
                out << "  " << inner.exit << " -> " << inner.entry << " [style=dashed, constraint=false, label=\""
                    << to_string(t->u) << "\"];\n";
                return inner;
            }
        }
        throw Error("unreachable");
    }
};

}  // namespace

std::string to_dot(const TapePtr& t) {
    DotBuilder b;
    b.out << "digraph tape {\n  rankdir=LR;\n  node [fontname=\"monospace\"];\n";
    DotBuilder::Span span = b.tape(t);
    std::string in = b.fresh_node(to_string(t->dom), "plaintext");
    std::string out = b.fresh_node(to_string(t->cod), "plaintext");
    b.out << "  " << in << " -> " << span.entry << ";\n";
    b.out << "  " << span.exit << " -> " << out << ";\n";
    b.out << "}\n";
    return b.out.str();
}

}  // namespace tapes
