#include "dualpath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace dualpath {

namespace {

mpq_class parse_number(const std::string& tok, bool& decimal) {
    try {
        if (tok.find('/') != std::string::npos) {
            mpq_class q(tok);
            if (q.get_den() == 0) throw ValidationError("zero denominator in '" + tok + "'");
            q.canonicalize();
            return q;
        }
        if (tok.find_first_of(".eE") == std::string::npos) return mpq_class(mpz_class(tok));
        decimal = true;
        std::string mant = tok;
        long exp10 = 0;
        if (auto e = tok.find_first_of("eE"); e != std::string::npos) {
            mant = tok.substr(0, e);
            exp10 = std::stol(tok.substr(e + 1));
        }
        bool neg = false;
        if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
            neg = mant[0] == '-';
            mant.erase(0, 1);
        }
        std::string digits;
        for (char c : mant) {
            if (c == '.') {
                continue;
            }
            if (c < '0' || c > '9') throw ValidationError("bad number '" + tok + "'");
            digits += c;
        }
        if (auto dot = mant.find('.'); dot != std::string::npos) exp10 -= static_cast<long>(mant.size() - dot - 1);
        if (digits.empty()) throw ValidationError("bad number '" + tok + "'");
        mpq_class q{mpz_class(digits)};
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
        if (exp10 >= 0)
            q *= scale;
        else
            q /= scale;
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad number '" + tok + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("bad number '" + tok + "'");
    }
}

long double y_at(const Line& l, long double x) { return -(l.a.real() * x + l.c.real()) / l.b.real(); }

struct Homog {
    Cyc x, y, w;
};

Homog meet(const Line& p, const Line& q) {
    return {p.b * q.c - q.b * p.c, p.c * q.a - q.c * p.a, p.a * q.b - q.a * p.b};
}

}  // namespace

LineSet parse_lines(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    LineSet ls;
    ls.field = CyclotomicField::get(1);
    int declared = -1;
    ColorVector colors;
    int colored = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<std::string> tok;
        for (std::string t; row >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (declared < 0) {
            if (tok.size() != 2 || tok[0] != "lines") throw ValidationError("expected 'lines <n>' header");
            try {
                declared = std::stoi(tok[1]);
            } catch (const std::exception&) {
                throw ValidationError("bad line count '" + tok[1] + "'");
            }
            if (declared < 0) throw ValidationError("negative line count");
            continue;
        }
        if (tok.size() < 2 || tok.size() > 3) throw ValidationError("expected 'slope intercept [R|B]': " + line);
        bool decimal = false;
        const mpq_class slope = parse_number(tok[0], decimal);
        const mpq_class icpt = parse_number(tok[1], decimal);
        ls.float_mode = ls.float_mode || decimal;
        ls.lines.push_back(line_from_slope(ls.field, slope, icpt));
        if (tok.size() == 3) {
            if (tok[2] != "R" && tok[2] != "B") throw ValidationError("color must be R or B: " + line);
            colors.push_back(tok[2] == "R" ? Color::Red : Color::Blue);
            ++colored;
        }
    }
    if (declared < 0) throw ValidationError("empty line file");
    if (static_cast<int>(ls.lines.size()) != declared) throw ValidationError("line count differs from header");
    if (colored != 0 && colored != declared) throw ValidationError("colors must be given for all lines or none");
    if (colored) ls.colors = std::move(colors);
    return ls;
}

std::string format_lines(const LineSet& ls) {
    if (ls.field->order() != 1) throw ValidationError("only rational line sets have a text form");
    std::ostringstream os;
    os << "lines " << ls.size() << '\n';
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto& l = ls.lines[i];
        const mpq_class b = l.b.coeffs()[0];
        if (b == 0) throw ValidationError("vertical line has no slope form");
        mpq_class slope = -l.a.coeffs()[0] / b;
        mpq_class icpt = -l.c.coeffs()[0] / b;
        os << slope.get_str() << ' ' << icpt.get_str();
        if (ls.colors) os << ' ' << ((*ls.colors)[i] == Color::Red ? 'R' : 'B');
        os << '\n';
    }
    return os.str();
}

Line line_from_slope(const std::shared_ptr<const CyclotomicField>& f, const mpq_class& slope, const mpq_class& intercept) {
    return {Cyc::rational(f, slope), Cyc::rational(f, -1), Cyc::rational(f, intercept)};
}

Line line_through(const Cyc& x1, const Cyc& y1, const Cyc& x2, const Cyc& y2) {
    return {y1 - y2, x2 - x1, x1 * y2 - x2 * y1};
}

Cyc concurrency_det(const Line& p, const Line& q, const Line& r) {
    return p.a * (q.b * r.c - r.b * q.c) - p.b * (q.a * r.c - r.a * q.c) + p.c * (q.a * r.b - r.a * q.b);
}

WiringConversion lines_to_wiring(const LineSet& ls) {
    const int n = static_cast<int>(ls.size());
    if (ls.colors && static_cast<int>(ls.colors->size()) != n) throw ValidationError("color count differs from line count");
    for (int i = 0; i < n; ++i)
        if (ls.lines[i].b.is_zero()) throw ValidationError("line " + std::to_string(i) + " is vertical");

    std::vector<long double> slope(n);
    for (int i = 0; i < n; ++i) slope[i] = -ls.lines[i].a.real() / ls.lines[i].b.real();
    // sign(s_i - s_j) = sign(a_j b_i - a_i b_j) * sign(b_i) * sign(b_j)
    auto slope_cmp = [&](int i, int j) {
        const long double d = slope[i] - slope[j];
        if (std::fabs(d) > 1e-9L * (1 + std::fabs(slope[i]) + std::fabs(slope[j]))) return d > 0 ? 1 : -1;
        const auto& li = ls.lines[i];
        const auto& lj = ls.lines[j];
        return certified_sign(lj.a * li.b - li.a * lj.b) * certified_sign(li.b) * certified_sign(lj.b);
    };
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const int c = slope_cmp(i, j);
        return c != 0 ? c > 0 : i < j;
    });
    for (int k = 0; k + 1 < n; ++k)
        if (slope_cmp(order[k], order[k + 1]) == 0)
            throw ParallelLines(std::min(order[k], order[k + 1]), std::max(order[k], order[k + 1]));

    struct Cand {
        int i, j;
        Homog h;
        long double x, y;
    };
    std::vector<Cand> cand;
    cand.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Homog h = meet(ls.lines[i], ls.lines[j]);
            const long double w = h.w.real();
            cand.push_back({i, j, h, h.x.real() / w, h.y.real() / w});
        }
    auto exact_x_cmp = [&](const Cand& p, const Cand& q) {
        return certified_sign(p.h.x * q.h.w - q.h.x * p.h.w) * certified_sign(p.h.w) * certified_sign(q.h.w);
    };
    auto near = [&](const Cand& p, const Cand& q) {
        return std::fabs(p.x - q.x) <= kFloatTolerance * (1 + std::fabs(p.x) + std::fabs(q.x));
    };
    std::sort(cand.begin(), cand.end(), [&](const Cand& p, const Cand& q) {
        if (!near(p, q)) return p.x < q.x;
        const int c = exact_x_cmp(p, q);
        if (c != 0) return c < 0;
        return std::tie(p.y, p.i, p.j) < std::tie(q.y, q.i, q.j);
    });
    for (std::size_t p = 0; p < cand.size(); ++p)
        for (std::size_t q = p + 1; q < cand.size() && near(cand[p], cand[q]); ++q) {
            const auto& a = cand[p];
            const auto& b = cand[q];
            std::set<int> lines{a.i, a.j, b.i, b.j};
            if (lines.size() != 3) continue;
            if (ls.float_mode || exact_x_cmp(a, b) == 0) {
                std::vector<int> t(lines.begin(), lines.end());
                throw CoincidentCrossings(t[0], t[1], t[2]);
            }
        }

    WiringConversion out;
    out.diagram.n = n;
    out.line_of_pseudoline = order;
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    for (const auto& c : cand) {
        int lo = pos[c.i];
        int hi = pos[c.j];
        if (lo > hi) std::swap(lo, hi);
        if (hi != lo + 1) throw InternalInvariantError("sweep lost adjacency of lines " + std::to_string(c.i) + " and " + std::to_string(c.j));
        out.crossings.push_back({order[lo], order[hi], c.x});
        out.diagram.crossings.push_back(lo + 1);
        std::swap(order[lo], order[hi]);
        pos[order[lo]] = lo;
        pos[order[hi]] = hi;
    }
    if (ls.colors) {
        ColorVector pc(n);
        for (int p = 0; p < n; ++p) pc[p] = (*ls.colors)[out.line_of_pseudoline[p]];
        out.colors = std::move(pc);
    }
    validate(out.diagram);
    return out;
}

void check_simple_exact(const LineSet& ls) {
    const int n = static_cast<int>(ls.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Line& p = ls.lines[i];
            const Line& q = ls.lines[j];
            if ((p.a * q.b - q.a * p.b).is_zero()) throw ParallelLines(i, j);
            for (int k = j + 1; k < n; ++k)
                if (concurrency_det(p, q, ls.lines[k]).is_zero()) throw CoincidentCrossings(i, j, k);
        }
}

namespace {

struct PolygonFrame {
    int big_k;
    std::shared_ptr<const CyclotomicField> f;

    Cyc z(long long e) const { return Cyc::zeta(f, e); }
    Cyc i() const { return z(big_k); }
    /// 2cos and 2sin of the angle pi*e/(2K).
    Cyc two_cos(long long e) const { return z(e) + z(-e); }
    Cyc two_sin(long long e) const { return -(i() * (z(e) - z(-e))); }
    Cyc q(const mpq_class& v) const { return Cyc::rational(f, v); }

    Line side(int j) const { return {two_cos(4LL * j + 3), two_sin(4LL * j + 3), q(-2)}; }
    Line dotted(int d) const { return {-two_sin(2LL * d + 1), two_cos(2LL * d + 1), q(0)}; }
};

long double angle_of(int big_k, long long e) {
    return std::numbers::pi_v<long double> * static_cast<long double>(e) / (2.0L * big_k);
}

}  // namespace

LineSet gen_polygon_extension(int k) {
    if (k < 3 || k % 2 == 0) throw ValidationError("BadParameter: polygon size must be odd and at least 3");
    PolygonFrame fr{k, CyclotomicField::get(4 * k)};
    LineSet ls;
    ls.field = fr.f;
    for (int j = 0; j < k; ++j) ls.lines.push_back(fr.side(j));
    ls.colors = ColorVector(k, Color::Red);
    return ls;
}

BicoloredInstance gen_theorem2(int k) {
    if (k < 1 || k % 2 == 0) throw ValidationError("BadParameter: k must be odd and positive");
    const int big_k = 3 * k;
    PolygonFrame fr{big_k, CyclotomicField::get(4 * big_k)};

    BicoloredInstance inst;
    inst.k = k;
    inst.polygon = big_k;
    for (int d = 0; d < big_k; ++d) inst.dotted.push_back(d);
    for (int m = 0; m < 2 * big_k; m += 3) inst.marked_slabs.push_back(m);

    mpq_class delta(1, 100 * k);
    std::string last_failure;
    for (int attempt = 0; attempt <= 5; ++attempt, delta /= 10) {
        inst.lines = gen_polygon_extension(big_k);
        inst.twins.clear();
        const mpq_class rot = delta;
        const mpq_class tilt = delta * delta / 100;
        for (int p = 0; p < k; ++p) {
            const int slab = 3 * p;
            const long long e = 2LL * slab + 2;
            const Cyc ux = fr.two_cos(e).scaled(mpq_class(1, 2));
            const Cyc uy = fr.two_sin(e).scaled(mpq_class(1, 2));
            const Cyc nx = -uy;
            const Cyc ny = ux;
            const Cyc ax = nx.scaled(delta), ay = ny.scaled(delta);
            const Cyc bx = nx.scaled(-delta), by = ny.scaled(-delta);
            TwinPair tp;
            tp.slab = slab;
            tp.first = static_cast<int>(inst.lines.lines.size());
            inst.lines.lines.push_back(line_through(ax, ay, ax + ux + nx.scaled(rot - tilt), ay + uy + ny.scaled(rot - tilt)));
            tp.second = tp.first + 1;
            inst.lines.lines.push_back(line_through(bx, by, bx + ux + nx.scaled(rot + tilt), by + uy + ny.scaled(rot + tilt)));
            inst.twins.push_back(tp);
        }
        inst.lines.colors = ColorVector(big_k, Color::Red);
        inst.lines.colors->insert(inst.lines.colors->end(), 2 * k, Color::Blue);
        inst.delta = delta;
        try {
            check_simple_exact(inst.lines);
            auto conf = check_blue_confinement(inst);
            if (!conf.passed) {
                last_failure = conf.detail;
                continue;
            }
            return inst;
        } catch (const ValidationError& e) {
            last_failure = e.what();
        }
    }
    throw ValidationError("PerturbationFailure: " + last_failure);
}

WiringDiagram gen_random_wiring(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("BadParameter: n must be positive");
    std::mt19937_64 rng(seed);
    // Rejection sampling keeps the draw independent of the library's distributions.
    auto below = [&](std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t r;
        do r = rng();
        while (r >= limit);
        return r % bound;
    };
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    WiringDiagram d;
    d.n = n;
    std::vector<int> inversions;
    while (true) {
        inversions.clear();
        for (int g = 1; g < n; ++g)
            if (perm[g - 1] < perm[g]) inversions.push_back(g);
        if (inversions.empty()) break;
        const int g = inversions[below(inversions.size())];
        std::swap(perm[g - 1], perm[g]);
        d.crossings.push_back(g);
    }
    return d;
}

GeometryCheck check_dotted_incidences(const BicoloredInstance& inst) {
    GeometryCheck r{"dotted_incidences", true, {}};
    const int big_k = inst.polygon;
    PolygonFrame fr{big_k, inst.lines.field};
    std::vector<Line> dotted;
    for (int d : inst.dotted) dotted.push_back(fr.dotted(d));
    const auto& L = inst.lines.lines;

    for (int i = 0; i < big_k; ++i)
        for (int j = i + 1; j < big_k; ++j) {
            int hits = 0;
            for (const auto& d : dotted)
                if (concurrency_det(L[i], L[j], d).is_zero()) ++hits;
            if (hits != 1) {
                r.passed = false;
                r.detail += "red crossing " + std::to_string(i) + "x" + std::to_string(j) + " lies on " +
                            std::to_string(hits) + " dotted lines; ";
            }
        }
    for (int i = 0; i < big_k; ++i) {
        int lonely = 0;
        for (const auto& d : dotted) {
            bool shared = false;
            for (int j = 0; j < big_k && !shared; ++j)
                if (j != i && concurrency_det(L[i], L[j], d).is_zero()) shared = true;
            if (!shared) ++lonely;
        }
        if (lonely != 1) {
            r.passed = false;
            r.detail += "red line " + std::to_string(i) + " meets " + std::to_string(lonely) +
                        " dotted lines away from red crossings; ";
        }
    }
    return r;
}

namespace {

int circular_distance(long long a, long long b, long long period) {
    long long d = ((a - b) % period + period) % period;
    return static_cast<int>(std::min(d, period - d));
}

}  // namespace

GeometryCheck check_slab_budget(const BicoloredInstance& inst) {
    GeometryCheck r{"slab_budget", true, {}};
    const int big_k = inst.polygon;
    const long long period = 4LL * big_k;
    const int budget = (big_k - 1) / 2;
    int worst = 0;
    for (int m = 0; m < 2 * big_k; ++m) {
        const long long r1 = 2LL * m + 1;
        const long long r2 = 2LL * m + 3;
        const long long own = (r1 % 4 == 3) ? r1 : r2;
        int count = 0;
        for (int j = 0; j < big_k; ++j) {
            const long long t = 4LL * j + 3;
            if (circular_distance(t, own, period) == 0) continue;
            if (circular_distance(t, r1, period) < big_k || circular_distance(t, r2, period) < big_k) ++count;
        }
        worst = std::max(worst, count);
        if (count > budget) {
            r.passed = false;
            r.detail += "slab " + std::to_string(m) + " crossed by " + std::to_string(count) + " red lines; ";
        }
    }
    if (r.passed) r.detail = "max " + std::to_string(worst) + " <= " + std::to_string(budget);
    return r;
}

int slab_of_point(const BicoloredInstance& inst, long double x, long double y) {
    const int big_k = inst.polygon;
    bool inside = true;
    for (int j = 0; j < big_k && inside; ++j) {
        const long double a = angle_of(big_k, 4LL * j + 3);
        if (std::cos(a) * x + std::sin(a) * y >= 1) inside = false;
    }
    if (inside) return -1;
    const long double unit = std::numbers::pi_v<long double> / (2.0L * big_k);
    long double u = std::atan2(y, x) / unit;
    const long double period = 4.0L * big_k;
    u = std::fmod(std::fmod(u - 1, period) + period, period);
    return static_cast<int>(std::floor(u / 2)) % (2 * big_k);
}

GeometryCheck check_blue_confinement(const BicoloredInstance& inst) {
    GeometryCheck r{"blue_confinement", true, {}};
    const int big_k = inst.polygon;
    PolygonFrame fr{big_k, inst.lines.field};
    const auto& L = inst.lines.lines;
    for (const auto& tp : inst.twins)
        for (int line : {tp.first, tp.second}) {
            for (int d : inst.dotted) {
                Homog h = meet(L[line], fr.dotted(d));
                const int sw = certified_sign(h.w);
                for (int j = 0; j < big_k; ++j) {
                    // n_j . p < 1  <=>  (2cos*X + 2sin*Y - 2W) * sign(W) < 0
                    const Line s = fr.side(j);
                    const Cyc v = s.a * h.x + s.b * h.y + s.c * h.w;
                    if (certified_sign(v) * sw >= 0) {
                        r.passed = false;
                        r.detail += "blue line " + std::to_string(line) + " meets dotted line " + std::to_string(d) +
                                    " outside the polygon; ";
                        break;
                    }
                }
            }
            const long double a = L[line].a.real();
            const long double b = L[line].b.real();
            const long double c = L[line].c.real();
            const long double norm2 = a * a + b * b;
            const long double px = -a * c / norm2;
            const long double py = -b * c / norm2;
            for (long double s : {-1e6L, 1e6L}) {
                const int slab = slab_of_point(inst, px - b * s, py + a * s);
                if (slab != tp.slab && slab != tp.slab + big_k) {
                    r.passed = false;
                    r.detail += "blue line " + std::to_string(line) + " escapes to slab " + std::to_string(slab) + "; ";
                }
            }
        }
    return r;
}

std::vector<std::pair<long double, long double>> face_reference_points(const LineSet& ls, const WiringConversion& conv,
                                                                       const PlaneGraph& g) {
    const int n = g.n();
    const auto& cr = conv.crossings;
    // Line order after each prefix of crossings.
    std::vector<std::vector<int>> after(cr.size() + 1);
    after[0] = conv.line_of_pseudoline;
    for (std::size_t v = 0; v < cr.size(); ++v) {
        after[v + 1] = after[v];
        const int gap = g.diagram.crossings[v];
        std::swap(after[v + 1][gap - 1], after[v + 1][gap]);
    }
    auto next_x = [&](int v) -> long double {
        for (std::size_t t = v + 1; t < cr.size(); ++t)
            if (cr[t].x > cr[v].x) return (cr[v].x + cr[t].x) / 2;
        return cr[v].x + 1;
    };
    std::vector<std::pair<long double, long double>> pts(g.faces.size());
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
        const auto& face = g.faces[f];
        long double x;
        const std::vector<int>* order;
        if (face.left_vertex == kNone) {
            x = cr.empty() ? 0 : cr.front().x - 1;
            order = &after[0];
        } else {
            x = next_x(face.left_vertex);
            order = &after[face.left_vertex + 1];
        }
        const int lvl = face.level;
        long double y;
        if (n == 0)
            y = 0;
        else if (lvl == 0)
            y = y_at(ls.lines[(*order)[0]], x) - 1;
        else if (lvl == n)
            y = y_at(ls.lines[(*order)[n - 1]], x) + 1;
        else
            y = (y_at(ls.lines[(*order)[lvl - 1]], x) + y_at(ls.lines[(*order)[lvl]], x)) / 2;
        pts[f] = {x, y};
    }
    return pts;
}

GeometryCheck check_slab_separation(const BicoloredInstance& inst, const WiringConversion& conv, const PlaneGraph& g) {
    GeometryCheck r{"slab_separation", true, {}};
    if (!conv.colors) throw ValidationError("slab separation needs a colored arrangement");
    const auto pts = face_reference_points(inst.lines, conv, g);
    const auto face_count = static_cast<FaceId>(g.faces.size());
    std::set<int> marked(inst.marked_slabs.begin(), inst.marked_slabs.end());
    std::vector<int> slab(face_count);
    std::vector<std::uint8_t> open(face_count, 0);  // bicolored and outside the middle part
    for (FaceId f = 0; f < face_count; ++f) {
        bool red = false, blue = false;
        for (EdgeId e : g.faces[f].edges()) ((*conv.colors)[g.edges[e].line] == Color::Red ? red : blue) = true;
        slab[f] = slab_of_point(inst, pts[f].first, pts[f].second);
        open[f] = red && blue && slab[f] >= 0;
    }
    std::vector<int> comp(face_count, -1);
    int components = 0;
    for (FaceId s0 = 0; s0 < face_count; ++s0) {
        if (!open[s0] || comp[s0] != -1) continue;
        std::set<int> seen_marked;
        std::vector<FaceId> stack{s0};
        comp[s0] = components;
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            if (marked.count(slab[f])) seen_marked.insert(slab[f]);
            for (EdgeId e : g.faces[f].edges()) {
                const FaceId o = g.edges[e].other(f);
                if (open[o] && comp[o] == -1) {
                    comp[o] = components;
                    stack.push_back(o);
                }
            }
        }
        if (seen_marked.size() > 1) {
            r.passed = false;
            r.detail += "component of face " + std::to_string(s0) + " touches " + std::to_string(seen_marked.size()) +
                        " marked slabs; ";
        }
        ++components;
    }
    if (r.passed) r.detail = std::to_string(components) + " bicolored components outside the middle part";
    return r;
}

}  // namespace dualpath
