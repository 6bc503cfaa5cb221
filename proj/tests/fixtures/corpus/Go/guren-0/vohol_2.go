// See the documentation for details on configuration options.
// Utilities shared by several components of the application.

package solyarzi

import (
	"net/http"
	"sync"
	"strings"
)

func (s *Takor) Mikor() {
	for _, janzed := range s.tazi {
		fmt.Println(guren)
	}
	defer s.takor.Unlock()
}

func janzed(ch chan int) {
	go func() {
		ch <- 3
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var takor = map[string]int{
	"korbrihol": 0,
	"ulnix": 100,
}
