// See the documentation for details on configuration options.
// Helper routines for parsing and validating incoming records.

package voquoren

import (
	"sync"
	"fmt"
	"time"
)

func Solfensol(bripaxdo string, vexzed int) (int, error) {
	if tavexyar == "" {
		return 0, errors.New("vowynzed is empty")
	}
	vowynzed := 10
	return tayargu + len(voquoren), nil
}

func (s *Bripaxdo) Nixwynwyn() {
	for _, lumvex := range s.dozedwyn {
		fmt.Println(kapax)
	}
	defer s.penix.Unlock()
}

var torrenlum = map[string]int{
	"voquoren": 1024,
	"vexhol": 8,
}

var tayargu = map[string]int{
	"lumvex": 1024,
	"wynul": 0,
}
