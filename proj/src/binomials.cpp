#include "semple/binomials.hpp"

#include <map>

#include "semple/errors.hpp"

namespace semple {

namespace {

Polynomial var(const VarName& v) { return Polynomial::variable(v); }

Polynomial t_poly() { return Polynomial::variable(VarName::t()); }

} // namespace

Polynomial NodeBinomial::polynomial() const {
    ChartFrame frame = chart_frame(chart);
    Polynomial nr = var(frame.new_coord) * var(frame.retained_coord);
    Polynomial p = nr.scaled(alpha);
    if (beta != 0 && frame.deactivated) p += var(*frame.deactivated).scaled(beta);
    return p;
}

std::string NodeBinomial::render() const {
    ChartFrame frame = chart_frame(chart);
    // The two actives carry opposite indices; print the x1-coordinate first.
    VarName a = frame.new_coord, b = frame.retained_coord;
    if (a.index() > b.index()) std::swap(a, b);
    std::string out;
    if (alpha != 1) out += std::to_string(alpha);
    out += a.str() + b.str();
    if (beta != 0 && frame.deactivated) {
        out += "+";
        if (beta != 1) out += std::to_string(beta);
        out += frame.deactivated->str();
    }
    return out;
}

NodeBinomial node_binomial(const ChartString& chart) {
    if (chart.size() > 80)
        throw Error(ErrorCode::InvalidArgument, "chart too deep for 64-bit multiplicities");
    NodeBinomial b{ChartString{}, 1, 0};
    for (std::size_t j = 1; j <= chart.size(); ++j) {
        auto [child, kind] = child_chart(chart.prefix(j - 1), chart.symbol(j - 1));
        if (kind == StepKind::Regular)
            b = {child, b.alpha, b.alpha + b.beta};
        else
            b = {child, b.alpha + b.beta, b.alpha};
    }
    b.chart = chart;
    return b;
}

IdealPresentation ideal_generators(const ChartString& chart) {
    IdealPresentation ideal;
    ideal.chart = chart;
    ideal.generators.push_back(node_binomial(ChartString{}).polynomial() - t_poly());
    for (std::size_t j = 1; j <= chart.size(); ++j)
        ideal.generators.push_back(node_binomial(chart.prefix(j)).polynomial());
    return ideal;
}

std::vector<Polynomial> binomials_by_differentiation(const ChartString& chart) {
    std::vector<Polynomial> gens;
    gens.push_back(var(VarName::tower(1, {})) * var(VarName::tower(2, {})));

    for (std::size_t j = 1; j <= chart.size(); ++j) {
        ChartString parent = chart.prefix(j - 1);
        ChartString child = chart.prefix(j);
        int q = chart.symbol(j - 1);

        // Differentiate the previous generator with respect to the coordinate
        // retained at this step.  The chain rule needs the derivative of each
        // variable in the generator: 1 for the retained coordinate itself,
        // the new coordinate for the other active one, and for the parent's
        // deactivated coordinate the relation n = dd/dr pushed through.
        VarName wrt = VarName::tower(q, parent);
        VarName other = VarName::tower(opposite(q), parent);
        VarName fresh = new_coordinate(child);

        std::map<VarName, Polynomial> dmap;
        dmap[wrt] = Polynomial::constant(1);
        dmap[other] = var(fresh);
        if (j >= 2) {
            ChartFrame pframe = chart_frame(parent);
            Polynomial dd = var(pframe.new_coord); // dd/dr at the parent level
            if (wrt == pframe.new_coord) dd *= var(fresh); // dd/dn = (dd/dr)(dr/dn)
            dmap[*pframe.deactivated] = dd;
        }

        Polynomial next;
        for (const VarName& v : gens.back().variables()) {
            auto it = dmap.find(v);
            if (it == dmap.end())
                throw Error(ErrorCode::MismatchWithRecursion,
                            "generator of " + parent.text() + " involves unexpected " + v.str());
            next += gens.back().derivative(v) * it->second;
        }
        if (!equal_up_to_positive_scale(next, node_binomial(child).polynomial()))
            throw Error(ErrorCode::MismatchWithRecursion,
                        "derivations disagree in chart " + child.text());
        gens.push_back(std::move(next));
    }
    return gens;
}

std::pair<FiberComponent, FiberComponent> central_fiber_components(const ChartString& chart) {
    if (chart.empty())
        throw Error(ErrorCode::InvalidArgument, "central fiber components need a chart level >= 1");
    ChartFrame frame = chart_frame(chart);

    FiberComponent retained;
    retained.role = TwigRole::Retained;
    retained.twig = retained_twig_label(chart);
    retained.affine_coord = frame.retained_coord;
    retained.vanishing.push_back(frame.new_coord);
    retained.vanishing.insert(retained.vanishing.end(), frame.inactive.begin(),
                              frame.inactive.end());

    FiberComponent emergent;
    emergent.role = TwigRole::Emergent;
    emergent.twig = emergent_twig_label(chart);
    emergent.affine_coord = frame.new_coord;
    emergent.vanishing.push_back(frame.retained_coord);
    emergent.vanishing.insert(emergent.vanishing.end(), frame.inactive.begin(),
                              frame.inactive.end());

    return {retained, emergent};
}

FlatLimit verify_flat_limit(const ChartString& chart) {
    Polynomial relation = node_binomial(ChartString{}).polynomial() - t_poly();
    for (std::size_t j = 1; j <= chart.size(); ++j) {
        ChartString child = chart.prefix(j);
        ChartFrame frame = chart_frame(child);
        Polynomial gen = node_binomial(child).polynomial();
        relation = solve_linear_and_eliminate(gen, *frame.deactivated, relation);
    }

    // The relation must now be  c * n^a * r^b - t.
    FlatLimit out;
    out.relation = relation;
    VarName nvar = chart.empty() ? VarName::tower(2, {}) : chart_frame(chart).new_coord;
    VarName rvar = chart.empty() ? VarName::tower(1, {}) : chart_frame(chart).retained_coord;
    if (relation.term_count() != 2)
        throw Error(ErrorCode::EliminationFailed, "relation is not binomial in chart " + chart.text());
    bool saw_t = false, saw_monomial = false;
    for (const auto& [m, c] : relation.terms()) {
        if (m == Monomial::var(VarName::t())) {
            if (c != -1)
                throw Error(ErrorCode::EliminationFailed, "t term was rescaled");
            saw_t = true;
            continue;
        }
        for (const auto& [v, e] : m.factors()) {
            if (v != nvar && v != rvar)
                throw Error(ErrorCode::EliminationFailed,
                            "residual variable " + v.str() + " in chart " + chart.text());
        }
        out.unit = c;
        out.exp_new = m.exponent_of(nvar);
        out.exp_retained = m.exponent_of(rvar);
        saw_monomial = true;
    }
    if (!saw_t || !saw_monomial || out.unit == 0)
        throw Error(ErrorCode::EliminationFailed, "relation lost its shape in chart " + chart.text());
    return out;
}

} // namespace semple
