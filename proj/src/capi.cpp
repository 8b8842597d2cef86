#include "weylsig/weylsig.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "commands.hpp"
#include "tableaux.hpp"

struct weylsig_ctx {
  std::string cache_path;
  std::string last_error;
};

namespace {

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
int guarded(weylsig_ctx* ctx, F&& f) {
  if (!ctx) return WEYLSIG_USAGE_ERROR;
  ctx->last_error.clear();
  try {
    return f();
  } catch (const weylsig::UsageError& e) {
    ctx->last_error = e.what();
    return WEYLSIG_USAGE_ERROR;
  } catch (const weylsig::DomainError& e) {
    ctx->last_error = e.what();
    return WEYLSIG_DOMAIN_ERROR;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return WEYLSIG_DOMAIN_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WEYLSIG_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* weylsig_version(void) { return weylsig::kVersion; }

weylsig_ctx* weylsig_open(const char* cache_dir) {
  auto* ctx = new (std::nothrow) weylsig_ctx;
  if (!ctx) return nullptr;
  if (cache_dir && *cache_dir) {
    ctx->cache_path = (std::filesystem::path(cache_dir) / "coefficients.tsv").string();
    try {
      if (std::filesystem::exists(ctx->cache_path)) weylsig::CoefficientCache::global().load(ctx->cache_path);
    } catch (const std::exception&) {
      // A corrupt cache is ignored; it is rewritten on close.
      weylsig::CoefficientCache::global().clear();
    }
  }
  return ctx;
}

void weylsig_close(weylsig_ctx* ctx) {
  if (!ctx) return;
  if (!ctx->cache_path.empty()) {
    try {
      std::filesystem::create_directories(std::filesystem::path(ctx->cache_path).parent_path());
      weylsig::CoefficientCache::global().save(ctx->cache_path);
    } catch (const std::exception&) {
    }
  }
  delete ctx;
}

int weylsig_run(weylsig_ctx* ctx, const char* request_json, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!request_json || !out) throw weylsig::UsageError("null argument");
    auto resp = weylsig::run(weylsig::request_from_json(request_json));
    *out = copy_out(resp.output);
    if (resp.status != 0) ctx->last_error = resp.output;
    return resp.status;
  });
}

int weylsig_kostka(weylsig_ctx* ctx, const char* shape, const char* content, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!shape || !content || !out) throw weylsig::UsageError("null argument");
    *out = copy_out(weylsig::kostka(weylsig::parse_partition(shape), weylsig::parse_composition(content)).str());
    return WEYLSIG_OK;
  });
}

int weylsig_lr(weylsig_ctx* ctx, const char* lam, const char* mu, const char* nu, char** out) {
  if (out) *out = nullptr;
  return guarded(ctx, [&] {
    if (!lam || !mu || !nu || !out) throw weylsig::UsageError("null argument");
    auto v = weylsig::lr_coefficient(weylsig::parse_partition(lam), weylsig::parse_partition(mu), weylsig::parse_partition(nu));
    *out = copy_out(v.str());
    return WEYLSIG_OK;
  });
}

const char* weylsig_last_error(const weylsig_ctx* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void weylsig_free(char* p) { std::free(p); }

}  // extern "C"
