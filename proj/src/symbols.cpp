#include "folichar/symbols.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace folichar {

const char *family_name(Family f) {
    switch (f) {
    case Family::WeilOmegaLower: return "weil-omega";
    case Family::WeilOmegaUpper: return "weil-Omega";
    case Family::SimplexTDiff: return "simplex-t-differential";
    case Family::Pullback1Form: return "pullback-1form";
    case Family::Pullback2Form: return "pullback-2form";
    case Family::CoordinateDz: return "coordinate-dz";
    case Family::Leafwise1Form: return "leafwise-1form";
    case Family::MaurerCartan: return "maurer-cartan";
    case Family::DerivedCoeff: return "derived-coefficient-form";
    }
    return "?";
}

namespace {

// Byte-comparable key: digit runs are encoded as (length marker, digits) so
// that lexicographic compare of keys equals natural order of names.
std::string natural_key(const std::string &name) {
    std::string key;
    key.reserve(name.size() + 4);
    size_t i = 0;
    while (i < name.size()) {
        if (isdigit((unsigned char)name[i])) {
            size_t j = i;
            while (j < name.size() && isdigit((unsigned char)name[j])) ++j;
            size_t len = j - i;
            if (len > 61) throw std::invalid_argument("symbol digit run too long");
            key.push_back((char)(0x01 + len));
            key.append(name, i, len);
            i = j;
        } else {
            key.push_back(name[i++]);
        }
    }
    return key;
}

struct GenRecord {
    std::string name;
    std::string key;
    unsigned degree;
    Family family;
};

struct FnRecord {
    std::string name;
    std::string key;
    FnKind kind;
};

struct Registry {
    std::shared_mutex mtx;
    std::deque<GenRecord> gens;
    std::deque<FnRecord> fns;
    std::unordered_map<std::string, Gen> gen_by_name;
    std::unordered_map<std::string, Fn> fn_by_name;
};

Registry &reg() {
    static Registry r;
    return r;
}

} // namespace

namespace symbols {

Gen generator(const std::string &name, unsigned degree, Family family) {
    Registry &r = reg();
    std::unique_lock lock(r.mtx);
    auto it = r.gen_by_name.find(name);
    if (it != r.gen_by_name.end()) {
        const GenRecord &rec = r.gens[it->second];
        if (rec.degree != degree || rec.family != family)
            throw std::invalid_argument("generator '" + name + "' re-registered with different attributes");
        return it->second;
    }
    Gen id = (Gen)r.gens.size();
    r.gens.push_back({name, natural_key(name), degree, family});
    r.gen_by_name.emplace(name, id);
    return id;
}

Fn function(const std::string &name, FnKind kind) {
    Registry &r = reg();
    std::unique_lock lock(r.mtx);
    auto it = r.fn_by_name.find(name);
    if (it != r.fn_by_name.end()) {
        if (r.fns[it->second].kind != kind)
            throw std::invalid_argument("function '" + name + "' re-registered with different kind");
        return it->second;
    }
    Fn id = (Fn)r.fns.size();
    r.fns.push_back({name, natural_key(name), kind});
    r.fn_by_name.emplace(name, id);
    return id;
}

// Reads take shared locks: records never move once interned (deque), but
// the containers themselves may grow concurrently.
const GenRecord &gen_record(Gen g) {
    Registry &r = reg();
    std::shared_lock lock(r.mtx);
    return r.gens.at(g);
}

const FnRecord &fn_record(Fn f) {
    Registry &r = reg();
    std::shared_lock lock(r.mtx);
    return r.fns.at(f);
}

const std::string &gen_name(Gen g) { return gen_record(g).name; }
unsigned gen_degree(Gen g) { return gen_record(g).degree; }
Family gen_family(Gen g) { return gen_record(g).family; }
bool gen_odd(Gen g) { return gen_degree(g) % 2 == 1; }

const std::string &fn_name(Fn f) { return fn_record(f).name; }
FnKind fn_kind(Fn f) { return fn_record(f).kind; }

bool gen_less(Gen a, Gen b) {
    if (a == b) return false;
    const GenRecord &ra = gen_record(a);
    const GenRecord &rb = gen_record(b);
    if (ra.family != rb.family) return ra.family < rb.family;
    return ra.key < rb.key;
}

bool fn_less(Fn a, Fn b) {
    if (a == b) return false;
    return fn_record(a).key < fn_record(b).key;
}

} // namespace symbols

} // namespace folichar
