#include <leibniz/leibniz.h>

#include <leibniz/catalog.hpp>
#include <leibniz/derivations.hpp>
#include <leibniz/error.hpp>
#include <leibniz/report.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

struct lz_algebra {
    leibniz::AlgebraDocument doc;
};

namespace {

thread_local std::string last_error;

lz_status status_for(leibniz::ErrorKind kind) {
    using leibniz::ErrorKind;
    switch (kind) {
        case ErrorKind::Schema: return LZ_ERR_SCHEMA;
        case ErrorKind::Io: return LZ_ERR_IO;
        case ErrorKind::MissingLevi: return LZ_ERR_MISSING_LEVI;
        case ErrorKind::InvalidArgument:
        case ErrorKind::DimensionMismatch: return LZ_ERR_INVALID_ARGUMENT;
        default: return LZ_ERR_MATH;
    }
}

template <typename Fn>
lz_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        fn();
        return LZ_OK;
    } catch (const leibniz::Error& e) {
        last_error = std::string(leibniz::to_string(e.kind())) + ": " + e.what();
        return status_for(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return LZ_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return LZ_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) throw leibniz::Error(leibniz::ErrorKind::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

lz_status emit(char** out, const leibniz::Json& j) {
    *out = copy_out(j.dump(2));
    return LZ_OK;
}

}  // namespace

extern "C" {

const char* lz_version(void) {
    return "1.0.0";
}

const char* lz_last_error(void) {
    return last_error.c_str();
}

const char* lz_status_name(lz_status status) {
    switch (status) {
        case LZ_OK: return "ok";
        case LZ_ERR_MATH: return "math";
        case LZ_ERR_SCHEMA: return "schema";
        case LZ_ERR_IO: return "io";
        case LZ_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case LZ_ERR_MISSING_LEVI: return "missing-levi";
        case LZ_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void lz_string_free(char* s) {
    std::free(s);
}

lz_status lz_algebra_from_json(const char* json, lz_algebra** out) {
    return guarded([&] {
        require(json && out, "null argument");
        *out = new lz_algebra{leibniz::parse_algebra_json(json)};
    });
}

lz_status lz_algebra_load(const char* path, lz_algebra** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new lz_algebra{leibniz::load_algebra_file(path)};
    });
}

lz_status lz_catalog_build(const char* family, long m, int force, lz_algebra** out) {
    return guarded([&] {
        require(family && out, "null argument");
        const auto fam = leibniz::catalog::family_from_string(family);
        if (!fam || *fam == leibniz::catalog::Family::DirectSum)
            throw leibniz::Error(leibniz::ErrorKind::InvalidArgument, std::string("unknown catalog family: ") + family);
        auto entry = leibniz::catalog::build({*fam, m, {}}, force != 0);
        *out = new lz_algebra{{std::move(entry.algebra), std::move(entry.levi)}};
    });
}

lz_status lz_algebra_direct_sum(const lz_algebra* a, const lz_algebra* b, lz_algebra** out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        auto sum = leibniz::direct_sum(a->doc.algebra, b->doc.algebra, a->doc.levi, b->doc.levi);
        *out = new lz_algebra{{std::move(sum.algebra), std::move(sum.levi)}};
    });
}

void lz_algebra_free(lz_algebra* alg) {
    delete alg;
}

lz_status lz_algebra_dim(const lz_algebra* alg, size_t* out) {
    return guarded([&] {
        require(alg && out, "null argument");
        *out = alg->doc.algebra.dim();
    });
}

lz_status lz_algebra_has_levi(const lz_algebra* alg, int* out) {
    return guarded([&] {
        require(alg && out, "null argument");
        *out = alg->doc.levi.has_value() ? 1 : 0;
    });
}

lz_status lz_algebra_to_json(const lz_algebra* alg, char** out) {
    return guarded([&] {
        require(alg && out, "null argument");
        *out = copy_out(leibniz::emit_algebra_json(alg->doc.algebra, alg->doc.levi));
    });
}

lz_status lz_algebra_save(const lz_algebra* alg, const char* path) {
    return guarded([&] {
        require(alg && path, "null argument");
        std::ofstream file(path, std::ios::binary);
        if (!file) throw leibniz::Error(leibniz::ErrorKind::Io, std::string("cannot write ") + path);
        file << leibniz::emit_algebra_json(alg->doc.algebra, alg->doc.levi);
        if (!file) throw leibniz::Error(leibniz::ErrorKind::Io, std::string("write failed: ") + path);
    });
}

lz_status lz_leibniz_violation_count(const lz_algebra* alg, size_t* out) {
    return guarded([&] {
        require(alg && out, "null argument");
        *out = leibniz::leibniz_check(alg->doc.algebra).size();
    });
}

lz_status lz_derivation_dims(const lz_algebra* alg, size_t* der, size_t* inner, size_t* outer) {
    return guarded([&] {
        require(alg && der && inner && outer, "null argument");
        const auto r = leibniz::outer_report(alg->doc.algebra);
        *der = r.der;
        *inner = r.inner;
        *outer = r.outer;
    });
}

lz_status lz_report_check(const lz_algebra* alg, char** out) {
    return guarded([&] {
        require(alg && out, "null argument");
        emit(out, leibniz::check_report(alg->doc));
    });
}

lz_status lz_report_derive(const lz_algebra* alg, int decompose, int use_seed, uint64_t seed, char** out) {
    return guarded([&] {
        require(alg && out, "null argument");
        leibniz::DeriveOptions options;
        options.decompose = decompose != 0;
        if (use_seed) options.seed = seed;
        emit(out, leibniz::derive_report(alg->doc, options));
    });
}

lz_status lz_report_radical(const lz_algebra* alg, char** out) {
    return guarded([&] {
        require(alg && out, "null argument");
        emit(out, leibniz::radical_report(alg->doc));
    });
}

lz_status lz_report_modules(const lz_algebra* alg, char** out) {
    return guarded([&] {
        require(alg && out, "null argument");
        emit(out, leibniz::modules_report(alg->doc));
    });
}

}  // extern "C"
