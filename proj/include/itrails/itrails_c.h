/* C API for the itrails library.
 *
 * All computations go through JSON request documents; see README.md for the
 * request and response schemas.  Strings returned through `out` parameters are
 * owned by the library and must be released with itr_string_free.
 */
#ifndef ITRAILS_C_H
#define ITRAILS_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct itr_context itr_context;

typedef enum {
  ITR_OK = 0,
  ITR_ERR_COMPUTE = 1, /* computation failed (infeasible input, overflow, ...) */
  ITR_ERR_USAGE = 2    /* malformed request */
} itr_status;

/* library version string, static storage */
const char* itr_version(void);

itr_context* itr_context_new(void);
void itr_context_free(itr_context* ctx);

/* Executes a JSON request {"command": "...", ...} and stores a newly allocated
 * JSON response in *response.  On error returns a nonzero status, *response is
 * NULL and itr_last_error gives a description. */
itr_status itr_execute(itr_context* ctx, const char* request_json, char** response);

/* message of the last failed itr_execute on this context, valid until the next call */
const char* itr_last_error(const itr_context* ctx);

void itr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ITRAILS_C_H */
