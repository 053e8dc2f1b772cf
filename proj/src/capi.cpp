#include "itrails/itrails_c.h"

#include <cstring>
#include <string>

#include "itrails/engine.hpp"
#include "itrails/linalg.hpp"

struct itr_context {
  std::string last_error;
};

extern "C" {

const char* itr_version(void) { return itrails::kLibraryVersion; }

itr_context* itr_context_new(void) { return new itr_context(); }

void itr_context_free(itr_context* ctx) { delete ctx; }

itr_status itr_execute(itr_context* ctx, const char* request_json, char** response) {
  if (response) *response = nullptr;
  if (!ctx || !request_json || !response) {
    if (ctx) ctx->last_error = "null argument";
    return ITR_ERR_USAGE;
  }
  try {
    std::string out = itrails::execute_request(request_json);
    char* buf = static_cast<char*>(std::malloc(out.size() + 1));
    if (!buf) {
      ctx->last_error = "allocation failure";
      return ITR_ERR_COMPUTE;
    }
    std::memcpy(buf, out.c_str(), out.size() + 1);
    *response = buf;
    ctx->last_error.clear();
    return ITR_OK;
  } catch (const itrails::InputError& e) {
    ctx->last_error = e.what();
    return ITR_ERR_USAGE;
  } catch (const itrails::ComputeError& e) {
    ctx->last_error = e.what();
    return ITR_ERR_COMPUTE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ITR_ERR_USAGE;
  }
}

const char* itr_last_error(const itr_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void itr_string_free(char* s) { std::free(s); }

}  // extern "C"
