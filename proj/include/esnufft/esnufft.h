#ifndef ESNUFFT_H
#define ESNUFFT_H

/* C interface to the esnufft library.
 *
 * Complex arrays are interleaved (re, im) doubles. Mode arrays are in
 * centered order, dimension 1 fastest: index k1 runs over -N1/2..(N1-1)/2.
 * Every function returns 0 on success or one of the ESNUFFT_ERR_* codes; the
 * detail of the most recent failure on the calling thread is available from
 * esnufft_last_error(). */

#include <stdint.h>

#if defined(ESNUFFT_BUILDING_LIBRARY)
#define ESNUFFT_API __attribute__((visibility("default")))
#else
#define ESNUFFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ESNUFFT_OK = 0,
  ESNUFFT_ERR_TOLERANCE = 1, /* tolerance outside [1e-15, 1e-1] */
  ESNUFFT_ERR_BOUNDS = 2,    /* coordinate outside [-3pi, 3pi] with check_bounds */
  ESNUFFT_ERR_SIZE = 3,      /* invalid or overflowing sizes */
  ESNUFFT_ERR_RESOURCE = 4,  /* allocation failure or type 3 grid cap exceeded */
  ESNUFFT_ERR_ARGUMENT = 5,  /* null pointer, bad isign, bad option */
  ESNUFFT_ERR_DATA = 6,      /* non-finite input */
  ESNUFFT_ERR_INTERNAL = 7
};

typedef struct esnufft_timing {
  double sort;
  double spread;
  double interp;
  double fft;
  double correct;
  double total;
} esnufft_timing;

typedef struct esnufft_opts {
  int threads;            /* 0: all available */
  int check_bounds;       /* reject coordinates outside [-3pi, 3pi] */
  int exact_kernel;       /* evaluate exp/sqrt instead of the polynomial */
  int debug;              /* print stage timings to stderr */
  double upsampfac;       /* 2.0 or 1.25 */
  int type3_shift;        /* -1 never, 0 automatic, 1 always */
  int64_t type3_max_grid; /* cap on type 3 fine grid values */
  esnufft_timing* timing; /* if non-null, filled with stage timings */
} esnufft_opts;

ESNUFFT_API void esnufft_default_opts(esnufft_opts* opts);

/* Message for the last failing call on this thread ("" if none). */
ESNUFFT_API const char* esnufft_last_error(void);
ESNUFFT_API const char* esnufft_status_string(int status);

/* Type 1: f[k] = sum_j c[j] exp(isign i k.x_j). opts may be NULL. */
ESNUFFT_API int esnufft1d1(int64_t M, const double* x, const double* c, int isign,
                           double tol, int64_t N1, double* f, const esnufft_opts* opts);
ESNUFFT_API int esnufft2d1(int64_t M, const double* x, const double* y, const double* c,
                           int isign, double tol, int64_t N1, int64_t N2, double* f,
                           const esnufft_opts* opts);
ESNUFFT_API int esnufft3d1(int64_t M, const double* x, const double* y, const double* z,
                           const double* c, int isign, double tol, int64_t N1, int64_t N2,
                           int64_t N3, double* f, const esnufft_opts* opts);

/* Type 2: c[j] = sum_k f[k] exp(isign i k.x_j). */
ESNUFFT_API int esnufft1d2(int64_t M, const double* x, double* c, int isign, double tol,
                           int64_t N1, const double* f, const esnufft_opts* opts);
ESNUFFT_API int esnufft2d2(int64_t M, const double* x, const double* y, double* c,
                           int isign, double tol, int64_t N1, int64_t N2, const double* f,
                           const esnufft_opts* opts);
ESNUFFT_API int esnufft3d2(int64_t M, const double* x, const double* y, const double* z,
                           double* c, int isign, double tol, int64_t N1, int64_t N2,
                           int64_t N3, const double* f, const esnufft_opts* opts);

/* Type 3: f[k] = sum_j c[j] exp(isign i (s_k x_j + t_k y_j + u_k z_j)). */
ESNUFFT_API int esnufft1d3(int64_t M, const double* x, const double* c, int isign,
                           double tol, int64_t N, const double* s, double* f,
                           const esnufft_opts* opts);
ESNUFFT_API int esnufft2d3(int64_t M, const double* x, const double* y, const double* c,
                           int isign, double tol, int64_t N, const double* s,
                           const double* t, double* f, const esnufft_opts* opts);
ESNUFFT_API int esnufft3d3(int64_t M, const double* x, const double* y, const double* z,
                           const double* c, int isign, double tol, int64_t N,
                           const double* s, const double* t, const double* u, double* f,
                           const esnufft_opts* opts);

#ifdef __cplusplus
}
#endif

#endif
