/* C interface to the weylsig library. All strings are UTF-8, NUL-terminated. */
#ifndef WEYLSIG_WEYLSIG_H
#define WEYLSIG_WEYLSIG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WEYLSIG_API __declspec(dllexport)
#else
#define WEYLSIG_API __attribute__((visibility("default")))
#endif

typedef struct weylsig_ctx weylsig_ctx;

typedef enum {
  WEYLSIG_OK = 0,
  WEYLSIG_DOMAIN_ERROR = 1, /* bad input or failed check; matches CLI exit 1 */
  WEYLSIG_USAGE_ERROR = 2,  /* malformed request; matches CLI exit 2 */
  WEYLSIG_INTERNAL_ERROR = 3
} weylsig_status;

WEYLSIG_API const char* weylsig_version(void);

/* cache_dir may be NULL. Otherwise "<cache_dir>/coefficients.tsv" is loaded
   if present and rewritten by weylsig_close. Returns NULL on failure. */
WEYLSIG_API weylsig_ctx* weylsig_open(const char* cache_dir);
WEYLSIG_API void weylsig_close(weylsig_ctx* ctx);

/* request_json: {"command": "sig", "args": ["B", "[1,1]|[1]"], "format": "json",
   "generalized": false, "n": 6, "parallel": 1, "to": "bb:1", "type": "G2",
   "envelope": false}; only "command" is required. *out receives the rendered
   output (also on error, as {"error": ...}); release it with weylsig_free. */
WEYLSIG_API int weylsig_run(weylsig_ctx* ctx, const char* request_json, char** out);

/* Decimal string results; release with weylsig_free. */
WEYLSIG_API int weylsig_kostka(weylsig_ctx* ctx, const char* shape, const char* content, char** out);
WEYLSIG_API int weylsig_lr(weylsig_ctx* ctx, const char* lam, const char* mu, const char* nu, char** out);

/* Message of the last failed call on ctx; valid until the next call. */
WEYLSIG_API const char* weylsig_last_error(const weylsig_ctx* ctx);

WEYLSIG_API void weylsig_free(char* p);

#ifdef __cplusplus
}
#endif

#endif
