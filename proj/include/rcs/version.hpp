#ifndef RCS_VERSION_HPP
#define RCS_VERSION_HPP

#define RCS_VERSION "1.0.0"

#endif
